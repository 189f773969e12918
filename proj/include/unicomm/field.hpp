#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "unicomm/error.hpp"

namespace unicomm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { prime, extension, rational };

/// Largest finite field the library will build. Element codes are 32-bit and
/// square roots are tabulated, so this also bounds memory per field.
inline constexpr std::uint32_t kMaxFieldSize = 1u << 20;

namespace detail {

// Immutable description of one field. Instances are interned and never
// destroyed, so handles and elements may hold raw pointers to them.
//
// Finite elements are encoded as integers in [0, q). The coefficient vector
// (c0, ..., c_{k-1}) of c0 + c1*x + ... is packed with c0 as the MOST
// significant base-p digit, which makes numeric code order coincide with the
// canonical (lexicographic, ascending degree) order.
struct FieldData {
  FieldKind kind = FieldKind::prime;
  std::uint32_t p = 0;
  unsigned k = 1;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;  // ascending, monic, size k+1 (extension only)
  bool builtin_modulus = false;
  std::vector<std::uint32_t> place;  // place[i] = p^(k-1-i)

  bool tabulated = false;
  std::vector<std::uint16_t> add_table;
  std::vector<std::uint16_t> mul_table;
  std::vector<std::uint32_t> inv_table;

  mutable std::once_flag sqrt_once;
  mutable std::vector<std::int64_t> sqrt_table;

  [[nodiscard]] std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  [[nodiscard]] std::uint32_t neg(std::uint32_t a) const;
  [[nodiscard]] std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  [[nodiscard]] std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  [[nodiscard]] std::uint32_t inv(std::uint32_t a) const;

  [[nodiscard]] std::vector<std::uint32_t> decode(std::uint32_t code) const;
  [[nodiscard]] std::uint32_t encode(const std::vector<std::uint32_t>& coeffs) const;

  // Untabulated paths, also used to build the tables.
  [[nodiscard]] std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const;
  [[nodiscard]] std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;
  [[nodiscard]] std::uint32_t inv_slow(std::uint32_t a) const;

  [[nodiscard]] const std::vector<std::int64_t>& sqrt_roots() const;
};

}  // namespace detail

class Element;

/// Cheap copyable handle to an interned field description.
class Field {
 public:
  static Field prime(std::uint32_t p);
  /// GF(p^k). Without a modulus, p^k must have a built-in one.
  static Field extension(std::uint32_t p, unsigned k,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);
  static Field rationals();
  /// GF(q) for a prime power q, using the built-in modulus when q is not prime.
  static Field galois(std::uint64_t q);
  static Field make(FieldKind kind, std::uint32_t p = 0, unsigned k = 1,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  [[nodiscard]] FieldKind kind() const { return data_->kind; }
  [[nodiscard]] std::uint32_t characteristic() const { return data_->p; }
  [[nodiscard]] unsigned degree() const { return data_->k; }
  [[nodiscard]] const std::vector<std::uint32_t>& modulus() const { return data_->modulus; }
  [[nodiscard]] bool is_finite() const { return data_->kind != FieldKind::rational; }
  /// Number of elements; nullopt for Q.
  [[nodiscard]] std::optional<std::uint64_t> size() const;
  /// Number of elements of a finite field (throws for Q).
  [[nodiscard]] std::uint32_t order() const;

  [[nodiscard]] Element zero() const;
  [[nodiscard]] Element one() const;
  [[nodiscard]] Element from_int(long long value) const;
  [[nodiscard]] Element from_rational(const Rational& value) const;
  [[nodiscard]] Element from_code(std::uint32_t code) const;
  [[nodiscard]] Element from_coefficients(const std::vector<std::uint32_t>& coeffs) const;

  /// All elements in canonical order (finite fields only).
  [[nodiscard]] std::vector<Element> elements() const;
  /// Nonzero elements in canonical order for finite fields; for Q the
  /// positive integers 1..limit.
  [[nodiscard]] std::vector<Element> scan_nonzero(std::size_t limit = 64) const;

  /// Text form: GF(7), GF(9), GF(9;1,0,1), Q.
  [[nodiscard]] std::string to_string() const;

  [[nodiscard]] const detail::FieldData* data() const { return data_; }

  friend bool operator==(const Field& a, const Field& b) { return a.data_ == b.data_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.data_ != b.data_; }

 private:
  explicit Field(const detail::FieldData* data) : data_(data) {}
  friend class Element;
  const detail::FieldData* data_;
};

/// Exact field element. Finite elements hold a canonical code, rationals a
/// normalised fraction.
class Element {
 public:
  Element(Field field, std::uint32_t code) : field_(field.data_), value_(code) {}
  Element(Field field, Rational value) : field_(field.data_), value_(std::move(value)) {}

  [[nodiscard]] Field field() const { return Field(field_); }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_one() const;

  [[nodiscard]] std::uint32_t code() const;
  [[nodiscard]] const Rational& rational() const;
  /// Coefficients c0..c_{k-1} (a single residue for prime fields).
  [[nodiscard]] std::vector<std::uint32_t> coefficients() const;

  [[nodiscard]] Element inv() const;
  [[nodiscard]] Element pow(long long exponent) const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Element& o);
  Element& operator/=(const Element& o);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Element& b) { return a *= b; }
  friend Element operator/(Element a, const Element& b) { return a /= b; }
  Element operator-() const;

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  /// Token form used by files and certificates.
  [[nodiscard]] std::string to_string() const;

 private:
  void require_same(const Element& o) const;

  const detail::FieldData* field_;
  std::variant<std::uint32_t, Rational> value_;
};

/// Fixed total order: residue value, coefficient vectors lexicographically
/// from the constant term, rationals by value.
bool canonical_less(const Element& a, const Element& b);

/// Some b with b*b == a, choosing the canonically smallest root in finite
/// fields and the positive root over Q.
std::optional<Element> sqrt(const Element& a);
bool is_square(const Element& a);

/// Nonzero (a, b) with a^2 + b^2 == target, first hit in canonical scan order.
std::optional<std::pair<Element, Element>> sum_of_two_nonzero_squares(const Element& target);

/// Partition of the nonzero squares S into an exceptional set E and
/// mutually inverse pairs (alpha, alpha^-1).
struct SquareClassData {
  Field field;
  bool infinite = false;
  std::vector<Element> squares;      // empty for Q
  std::vector<Element> exceptional;  // E
  std::vector<std::pair<Element, Element>> pairs;
};

/// For Q, `min_pairs` pairs (4,1/4), (9,1/9), ... are generated.
SquareClassData square_class_pairing(Field field, std::size_t min_pairs = 0);

/// Nonzero b with b^2 != b^-2, first hit in canonical scan order.
Element square_ne_inverse_witness(Field field);

/// Is -1 a square in the field?
bool minus_one_is_square(Field field);

}  // namespace unicomm
