#include "unicomm/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace unicomm {

Matrix::Matrix(Field field, std::size_t n) : field_(field), n_(n), a_(n * n, field.zero()) {
  if (n == 0) throw Error(ErrorCode::SizeMismatch, "matrix dimension must be at least 1");
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::scalar(const Element& lambda, std::size_t n) {
  Matrix m(lambda.field(), n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = lambda;
  return m;
}

Matrix Matrix::diagonal(Field field, const std::vector<Element>& entries) {
  Matrix m(field, entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].field() != field) throw Error(ErrorCode::FieldMismatch, "diagonal entry from another field");
    m(i, i) = entries[i];
  }
  return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<Element>>& rows) {
  Matrix m(field, rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw Error(ErrorCode::SizeMismatch, "matrix rows must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (rows[i][j].field() != field) throw Error(ErrorCode::FieldMismatch, "entry from another field");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::from_columns(Field field, const std::vector<Vector>& columns) {
  Matrix m(field, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != columns.size()) throw Error(ErrorCode::SizeMismatch, "columns must be square");
    for (std::size_t i = 0; i < columns.size(); ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Matrix Matrix::from_ints(Field field, std::initializer_list<std::initializer_list<long long>> rows) {
  Matrix m(field, rows.size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw Error(ErrorCode::SizeMismatch, "matrix rows must be square");
    std::size_t j = 0;
    for (long long v : r) m(i, j++) = field.from_int(v);
    ++i;
  }
  return m;
}

Matrix Matrix::jordan_block(std::size_t n, const Element& lambda) {
  Matrix m = scalar(lambda, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = lambda.field().one();
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(a_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
}

Vector Matrix::column(std::size_t j) const {
  Vector v;
  v.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) v.push_back((*this)(i, j));
  return v;
}

std::vector<Element> Matrix::diagonal_entries() const {
  std::vector<Element> d;
  d.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) d.push_back((*this)(i, i));
  return d;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Element& e) { return e.is_zero(); });
}

bool Matrix::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const Element& e = (*this)(i, j);
      if (i == j ? !e.is_one() : !e.is_zero()) return false;
    }
  }
  return true;
}

bool Matrix::is_diagonal() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (i != j && !(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

bool Matrix::is_scalar() const {
  if (!is_diagonal()) return false;
  for (std::size_t i = 1; i < n_; ++i) {
    if ((*this)(i, i) != (*this)(0, 0)) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Element Matrix::trace() const {
  Element t = field_.zero();
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

namespace {

// Forward elimination with the first nonzero entry of each column as pivot.
// Returns the rank; `sign` and `det` track the determinant of the input.
struct Elimination {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

Elimination row_reduce(std::vector<Vector>& rows, std::size_t cols, bool reduced) {
  Elimination out;
  const std::size_t m = rows.size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && rows[piv][c].is_zero()) ++piv;
    if (piv == m) continue;
    std::swap(rows[r], rows[piv]);
    const Element inv = rows[r][c].inv();
    for (std::size_t j = c; j < cols; ++j) rows[r][j] *= inv;
    for (std::size_t i = reduced ? 0 : r + 1; i < m; ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Element factor = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::vector<Vector> rows_of(const Matrix& a) {
  std::vector<Vector> rows;
  rows.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) rows.push_back(a.row(i));
  return rows;
}

}  // namespace

Element Matrix::determinant() const {
  std::vector<Vector> rows = rows_of(*this);
  Element det = field_.one();
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t piv = c;
    while (piv < n_ && rows[piv][c].is_zero()) ++piv;
    if (piv == n_) return field_.zero();
    if (piv != c) {
      std::swap(rows[c], rows[piv]);
      det = -det;
    }
    det *= rows[c][c];
    const Element inv = rows[c][c].inv();
    for (std::size_t i = c + 1; i < n_; ++i) {
      if (rows[i][c].is_zero()) continue;
      const Element factor = rows[i][c] * inv;
      for (std::size_t j = c; j < n_; ++j) rows[i][j] -= factor * rows[c][j];
    }
  }
  return det;
}

std::size_t Matrix::rank() const {
  std::vector<Vector> rows = rows_of(*this);
  return row_reduce(rows, n_, false).rank;
}

Matrix Matrix::inverse() const {
  std::vector<Vector> rows;
  rows.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    Vector r = row(i);
    for (std::size_t j = 0; j < n_; ++j) r.push_back(i == j ? field_.one() : field_.zero());
    rows.push_back(std::move(r));
  }
  const Elimination e = row_reduce(rows, 2 * n_, true);
  if (e.rank < n_ || e.pivot_columns.back() >= n_) throw Error(ErrorCode::Singular, "matrix is singular");
  Matrix inv(field_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) inv(i, j) = rows[i][n_ + j];
  }
#ifndef NDEBUG
  if (!((*this) * inv).is_identity()) throw Error(ErrorCode::Internal, "inverse failed its product check");
#endif
  return inv;
}

Matrix Matrix::power(long long exponent) const {
  Matrix base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-(exponent + 1)) + 1
                                      : static_cast<unsigned long long>(exponent);
  Matrix result = identity(field_, n_);
  while (e > 0) {
    if (e & 1ull) result = result * base;
    e >>= 1ull;
    if (e > 0) base = base * base;
  }
  return result;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != n_) throw Error(ErrorCode::SizeMismatch, "vector length does not match matrix");
  Vector out(n_, field_.zero());
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

void Matrix::require_conformable(const Matrix& o) const {
  if (field_ != o.field_) throw Error(ErrorCode::FieldMismatch, "matrices over different fields");
  if (n_ != o.n_) throw Error(ErrorCode::SizeMismatch, "matrix sizes differ");
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_conformable(o);
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_conformable(o);
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  a.require_conformable(b);
  const std::size_t n = a.n_;
  Matrix c(a.field_, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Element& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

Matrix operator*(const Element& s, Matrix a) {
  for (auto& e : a.a_) e = s * e;
  return a;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& e : m.a_) e = -e;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.n_ == b.n_ && a.a_ == b.a_;
}

std::string Matrix::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) s += " ";
      s += (*this)(i, j).to_string();
    }
  }
  return "[" + s + "]";
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw Error(ErrorCode::FieldMismatch, "direct sum over different fields");
  const std::size_t n = a.size() + b.size();
  Matrix m(a.field(), n);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) m(a.size() + i, a.size() + j) = b(i, j);
  }
  return m;
}

Matrix direct_sum(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw Error(ErrorCode::SizeMismatch, "direct sum of no blocks");
  Matrix m = blocks.front();
  for (std::size_t i = 1; i < blocks.size(); ++i) m = direct_sum(m, blocks[i]);
  return m;
}

std::vector<Vector> kernel_basis(const Matrix& a) {
  const std::size_t n = a.size();
  std::vector<Vector> rows = rows_of(a);
  const Elimination e = row_reduce(rows, n, true);
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n, a.field().zero());
    v[free] = a.field().one();
    for (std::size_t r = 0; r < e.rank; ++r) v[e.pivot_columns[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Vector SpanTracker::reduce(Vector v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Element& c = v[pivots_[r]];
    if (c.is_zero()) continue;
    const Element factor = c;
    for (std::size_t j = 0; j < dim_; ++j) v[j] -= factor * rows_[r][j];
  }
  return v;
}

bool SpanTracker::contains(const Vector& v) const {
  const Vector r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Element& e) { return e.is_zero(); });
}

bool SpanTracker::add(const Vector& v) {
  if (v.size() != dim_) throw Error(ErrorCode::SizeMismatch, "vector length does not match span");
  Vector r = reduce(v);
  std::size_t piv = 0;
  while (piv < dim_ && r[piv].is_zero()) ++piv;
  if (piv == dim_) return false;
  const Element inv = r[piv].inv();
  for (auto& e : r) e *= inv;
  // Keep rows fully reduced against the new pivot.
  for (auto& row : rows_) {
    if (row[piv].is_zero()) continue;
    const Element factor = row[piv];
    for (std::size_t j = 0; j < dim_; ++j) row[j] -= factor * r[j];
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(piv);
  return true;
}

// ---------------------------------------------------------------------------

Polynomial poly_trim(Polynomial p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial c(a.size() + b.size() - 1, a.front().field().zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return poly_trim(std::move(c));
}

Polynomial poly_mod(const Polynomial& a, const Polynomial& b) {
  const Polynomial d = poly_trim(b);
  if (d.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  Polynomial r = poly_trim(a);
  const Element lead_inv = d.back().inv();
  while (r.size() >= d.size()) {
    const Element factor = r.back() * lead_inv;
    const std::size_t shift = r.size() - d.size();
    for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= factor * d[i];
    r = poly_trim(std::move(r));
  }
  return r;
}

Polynomial poly_from_roots(Field field, const std::vector<Element>& roots) {
  Polynomial p{field.one()};
  for (const Element& r : roots) p = poly_mul(p, Polynomial{-r, field.one()});
  return p;
}

Matrix poly_eval(const Polynomial& p, const Matrix& a) {
  Matrix result(a.field(), a.size());
  for (std::size_t i = p.size(); i-- > 0;) {
    result = result * a + Matrix::scalar(p[i], a.size());
  }
  return result;
}

Polynomial charpoly(const Matrix& a) {
  const std::size_t n = a.size();
  const Field f = a.field();
  Matrix h = a;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t k = 0; k + 2 < n; ++k) {
    std::size_t piv = k + 1;
    while (piv < n && h(piv, k).is_zero()) ++piv;
    if (piv == n) continue;
    if (piv != k + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(k + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, k + 1));
    }
    const Element inv = h(k + 1, k).inv();
    for (std::size_t i = k + 2; i < n; ++i) {
      if (h(i, k).is_zero()) continue;
      const Element t = h(i, k) * inv;
      for (std::size_t j = 0; j < n; ++j) h(i, j) -= t * h(k + 1, j);
      for (std::size_t r = 0; r < n; ++r) h(r, k + 1) += t * h(r, i);
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{j=i+1}^{m} h_{j,j-1}) p_{i-1}, 1-indexed.
  std::vector<Polynomial> p;
  p.push_back(Polynomial{f.one()});
  for (std::size_t m = 1; m <= n; ++m) {
    Polynomial next = poly_mul(Polynomial{-h(m - 1, m - 1), f.one()}, p[m - 1]);
    Element prod = f.one();
    for (std::size_t i = m - 1; i >= 1; --i) {
      prod *= h(i, i - 1);
      const Element coeff = h(i - 1, m - 1) * prod;
      if (!coeff.is_zero()) {
        const Polynomial& prev = p[i - 1];
        next.resize(std::max(next.size(), prev.size()), f.zero());
        for (std::size_t d = 0; d < prev.size(); ++d) next[d] -= coeff * prev[d];
      }
    }
    p.push_back(poly_trim(std::move(next)));
  }
  return p[n];
}

Polynomial minpoly(const Matrix& a) {
  const std::size_t n = a.size();
  const Field f = a.field();
  auto flatten = [n](const Matrix& m) {
    Vector v;
    v.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) v.push_back(m(i, j));
    }
    return v;
  };
  std::vector<Vector> powers{flatten(Matrix::identity(f, n))};
  Matrix current = Matrix::identity(f, n);
  for (std::size_t d = 1; d <= n; ++d) {
    current = current * a;
    const Vector target = flatten(current);
    // Solve sum_j c_j vec(A^j) = vec(A^d) on the augmented system.
    std::vector<Vector> rows(n * n, Vector(d + 1, f.zero()));
    for (std::size_t r = 0; r < n * n; ++r) {
      for (std::size_t j = 0; j < d; ++j) rows[r][j] = powers[j][r];
      rows[r][d] = target[r];
    }
    const auto e = row_reduce(rows, d + 1, true);
    const bool consistent = e.pivot_columns.empty() || e.pivot_columns.back() < d;
    if (consistent) {
      Polynomial m(d + 1, f.zero());
      for (std::size_t r = 0; r < e.rank; ++r) m[e.pivot_columns[r]] = -rows[r][d];
      m[d] = f.one();
      return m;
    }
    powers.push_back(target);
  }
  throw Error(ErrorCode::Internal, "minimal polynomial degree exceeds n");
}

CharMinPoly char_min_poly(const Matrix& a) {
  CharMinPoly out{charpoly(a), minpoly(a)};
  if (!poly_mod(out.charpoly, out.minpoly).empty()) {
    throw Error(ErrorCode::Internal, "minimal polynomial does not divide the characteristic polynomial");
  }
  return out;
}

// ---------------------------------------------------------------------------

JordanData unipotent_jordan(const Matrix& a) {
  const std::size_t n = a.size();
  const Field f = a.field();
  const Matrix nil = a - Matrix::identity(f, n);

  // Powers N^0..N^index and their kernels.
  std::vector<Matrix> powers{Matrix::identity(f, n)};
  while (!powers.back().is_zero()) {
    if (powers.size() > n) throw Error(ErrorCode::NotUnipotent, "(A - I)^n is nonzero");
    powers.push_back(powers.back() * nil);
  }
  const std::size_t index = powers.size() - 1;

  struct Chain {
    Vector head;
    std::size_t height;
  };
  std::vector<Chain> chains;
  for (std::size_t j = index; j >= 1; --j) {
    SpanTracker span(f, n);
    for (const Vector& v : kernel_basis(powers[j - 1])) span.add(v);
    for (const Chain& c : chains) span.add(powers[c.height - j].apply(c.head));
    for (const Vector& w : kernel_basis(powers[j])) {
      if (span.add(w)) chains.push_back({w, j});
    }
  }

  std::vector<Vector> columns;
  std::vector<std::size_t> partition;
  for (const Chain& c : chains) {
    partition.push_back(c.height);
    for (std::size_t s = c.height; s-- > 0;) columns.push_back(powers[s].apply(c.head));
  }
  if (columns.size() != n) throw Error(ErrorCode::Internal, "Jordan chains do not span the space");

  const Matrix q = Matrix::from_columns(f, columns);
  Matrix form = Matrix::identity(f, n);
  std::size_t offset = 0;
  for (std::size_t s : partition) {
    for (std::size_t i = 0; i + 1 < s; ++i) form(offset + i, offset + i + 1) = f.one();
    offset += s;
  }
  JordanData out{partition, q.inverse(), form};
  if (out.transform * a * q != form) throw Error(ErrorCode::Internal, "Jordan transform check failed");
  return out;
}

Matrix companion_similarity_2x2(const Matrix& a) {
  if (a.size() != 2) throw Error(ErrorCode::SizeMismatch, "companion similarity is for 2x2 matrices");
  if (a.is_scalar()) throw Error(ErrorCode::ScalarInput, "scalar matrices are not similar to a companion matrix");
  const Field f = a.field();
  const std::vector<Vector> candidates{{f.one(), f.zero()}, {f.zero(), f.one()}, {f.one(), f.one()}};
  for (const Vector& v : candidates) {
    const Vector av = a.apply(v);
    const Matrix q = Matrix::from_columns(f, {v, av});
    if (q.determinant().is_zero()) continue;
    return q.inverse();
  }
  throw Error(ErrorCode::Internal, "no cyclic vector for a nonscalar 2x2 matrix");
}

Matrix diagonalize(const Matrix& a, const std::vector<Element>& target_diagonal) {
  const std::size_t n = a.size();
  if (target_diagonal.size() != n) throw Error(ErrorCode::SizeMismatch, "spectrum length differs from n");
  const Field f = a.field();
  std::vector<Vector> columns(n);
  std::vector<bool> done(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    const Element& lambda = target_diagonal[i];
    std::vector<std::size_t> slots;
    for (std::size_t j = i; j < n; ++j) {
      if (target_diagonal[j] == lambda) slots.push_back(j);
    }
    const auto kernel = kernel_basis(a - Matrix::scalar(lambda, n));
    if (kernel.size() != slots.size()) {
      throw Error(ErrorCode::SpectrumMismatch, "eigenspace of " + lambda.to_string() + " has the wrong dimension");
    }
    for (std::size_t s = 0; s < slots.size(); ++s) {
      columns[slots[s]] = kernel[s];
      done[slots[s]] = true;
    }
  }
  const Matrix q = Matrix::from_columns(f, columns);
  if (q.determinant().is_zero()) throw Error(ErrorCode::SpectrumMismatch, "eigenvectors are dependent");
  return q.inverse();
}

Matrix diagonalize_known_spectrum(const Matrix& a, const std::vector<Element>& spectrum) {
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    for (std::size_t j = i + 1; j < spectrum.size(); ++j) {
      if (spectrum[i] == spectrum[j]) throw Error(ErrorCode::SpectrumMismatch, "spectrum is not distinct");
    }
  }
  if (charpoly(a) != poly_from_roots(a.field(), spectrum)) {
    throw Error(ErrorCode::SpectrumMismatch, "characteristic polynomial does not match the spectrum");
  }
  return diagonalize(a, spectrum);
}

Matrix permutation_similarity(const Matrix& d, const std::vector<std::size_t>& order) {
  const std::size_t n = d.size();
  if (order.size() != n) throw Error(ErrorCode::SizeMismatch, "permutation length differs from n");
  Matrix p(d.field(), n);
  for (std::size_t i = 0; i < n; ++i) p(i, order[i]) = d.field().one();
  return p;
}

std::vector<std::size_t> matching_order(const std::vector<Element>& from, const std::vector<Element>& to) {
  if (from.size() != to.size()) throw Error(ErrorCode::SizeMismatch, "diagonals differ in length");
  std::vector<std::size_t> order(to.size());
  std::vector<bool> used(from.size(), false);
  for (std::size_t i = 0; i < to.size(); ++i) {
    std::size_t j = 0;
    while (j < from.size() && (used[j] || from[j] != to[i])) ++j;
    if (j == from.size()) throw Error(ErrorCode::SpectrumMismatch, "diagonals are not permutations of each other");
    used[j] = true;
    order[i] = j;
  }
  return order;
}

}  // namespace unicomm
