#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "unicomm/field.hpp"

namespace unicomm {

using Vector = std::vector<Element>;

/// Dense square matrix over an exact field. Value semantics throughout.
class Matrix {
 public:
  Matrix(Field field, std::size_t n);

  static Matrix identity(Field field, std::size_t n);
  static Matrix scalar(const Element& lambda, std::size_t n);
  static Matrix diagonal(Field field, const std::vector<Element>& entries);
  static Matrix from_rows(Field field, const std::vector<std::vector<Element>>& rows);
  static Matrix from_columns(Field field, const std::vector<Vector>& columns);
  static Matrix from_ints(Field field, std::initializer_list<std::initializer_list<long long>> rows);
  /// Upper triangular Jordan block J_n(lambda).
  static Matrix jordan_block(std::size_t n, const Element& lambda);

  [[nodiscard]] Field field() const { return field_; }
  [[nodiscard]] std::size_t size() const { return n_; }

  [[nodiscard]] const Element& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  Element& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

  [[nodiscard]] Vector row(std::size_t i) const;
  [[nodiscard]] Vector column(std::size_t j) const;
  [[nodiscard]] std::vector<Element> diagonal_entries() const;

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] bool is_scalar() const;
  [[nodiscard]] bool is_diagonal() const;

  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] Element trace() const;
  [[nodiscard]] Element determinant() const;
  [[nodiscard]] std::size_t rank() const;
  [[nodiscard]] std::size_t nullity() const { return n_ - rank(); }
  /// Throws Singular.
  [[nodiscard]] Matrix inverse() const;
  /// Negative exponents go through the inverse.
  [[nodiscard]] Matrix power(long long exponent) const;
  [[nodiscard]] Vector apply(const Vector& v) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Element& s, Matrix a);
  Matrix operator-() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  /// Debug form, rows separated by ';'.
  [[nodiscard]] std::string to_string() const;

 private:
  void require_conformable(const Matrix& o) const;

  Field field_;
  std::size_t n_;
  std::vector<Element> a_;
};

Matrix direct_sum(const Matrix& a, const Matrix& b);
Matrix direct_sum(const std::vector<Matrix>& blocks);

/// Canonical nullspace basis from the reduced row echelon form: one vector per
/// free column, with a 1 in that column.
std::vector<Vector> kernel_basis(const Matrix& a);

/// Incrementally maintained span of vectors, used to test independence.
class SpanTracker {
 public:
  explicit SpanTracker(Field field, std::size_t dim) : field_(field), dim_(dim) {}
  /// Adds v if it is outside the current span; returns whether it was added.
  bool add(const Vector& v);
  [[nodiscard]] bool contains(const Vector& v) const;
  [[nodiscard]] std::size_t dimension() const { return rows_.size(); }

 private:
  [[nodiscard]] Vector reduce(Vector v) const;

  Field field_;
  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

// ---------------------------------------------------------------------------
// Polynomials: coefficient lists in ascending degree, leading coefficient
// nonzero (the zero polynomial is the empty list).

using Polynomial = std::vector<Element>;

Polynomial poly_trim(Polynomial p);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
/// Remainder of a by a nonzero b.
Polynomial poly_mod(const Polynomial& a, const Polynomial& b);
/// prod (x - r_i).
Polynomial poly_from_roots(Field field, const std::vector<Element>& roots);
Matrix poly_eval(const Polynomial& p, const Matrix& a);

struct CharMinPoly {
  Polynomial charpoly;
  Polynomial minpoly;
};

/// Characteristic polynomial via Hessenberg reduction; valid in every
/// characteristic since nothing is divided by an integer.
Polynomial charpoly(const Matrix& a);
/// Smallest d with A^d in span(I, ..., A^{d-1}).
Polynomial minpoly(const Matrix& a);
CharMinPoly char_min_poly(const Matrix& a);

// ---------------------------------------------------------------------------
// Canonical forms and similarities. Every routine returns P with
// P * A * P^-1 equal to the named form.

struct JordanData {
  std::vector<std::size_t> partition;  // non-increasing block sizes
  Matrix transform;                    // P
  Matrix form;                         // direct sum of J_{n_i}(1)
};

/// Jordan form of a unipotent matrix with explicit transform. Throws NotUnipotent.
JordanData unipotent_jordan(const Matrix& a);

/// P with P A P^-1 = [[0, -det A], [1, tr A]] for a nonscalar 2x2 A.
Matrix companion_similarity_2x2(const Matrix& a);

/// P with P A P^-1 = diag(spectrum) for pairwise distinct eigenvalues.
Matrix diagonalize_known_spectrum(const Matrix& a, const std::vector<Element>& spectrum);

/// As above but eigenvalues may repeat; A must be diagonalizable with exactly
/// that multiset of eigenvalues. Throws SpectrumMismatch otherwise.
Matrix diagonalize(const Matrix& a, const std::vector<Element>& target_diagonal);

/// Permutation P with (P d P^-1)(i,i) = d(order[i], order[i]).
Matrix permutation_similarity(const Matrix& d, const std::vector<std::size_t>& order);

/// Index order sending the entries of `from` onto `to` (equal multisets), for
/// use with permutation_similarity. Throws SpectrumMismatch if none exists.
std::vector<std::size_t> matching_order(const std::vector<Element>& from, const std::vector<Element>& to);

}  // namespace unicomm
