#include "unicomm/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <tuple>

namespace unicomm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::NoBuiltinModulus: return "NoBuiltinModulus";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotUnipotent: return "NotUnipotent";
    case ErrorCode::ScalarInput: return "ScalarInput";
    case ErrorCode::SpectrumMismatch: return "SpectrumMismatch";
    case ErrorCode::DeterminantMismatch: return "DeterminantMismatch";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::NotU2: return "NotU2";
    case ErrorCode::NotASquare: return "NotASquare";
    case ErrorCode::DegenerateValue: return "DegenerateValue";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::UnsupportedFieldSize: return "UnsupportedFieldSize";
    case ErrorCode::NotSL2: return "NotSL2";
    case ErrorCode::NotSLn: return "NotSLn";
    case ErrorCode::OutsideDerivedSubgroup: return "OutsideDerivedSubgroup";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

constexpr std::uint32_t kTableLimit = 256;

// Remainder of f modulo the monic g, coefficients ascending, over GF(p).
std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> f, const std::vector<std::uint32_t>& g,
                                    std::uint32_t p) {
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint64_t lead = f.back();
    if (lead != 0) {
      const std::size_t shift = f.size() - 1 - dg;
      for (std::size_t i = 0; i <= dg; ++i) {
        f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + (p - lead) * g[i]) % p);
      }
    }
    f.pop_back();
  }
  return f;
}

}  // namespace

namespace detail {

std::vector<std::uint32_t> FieldData::decode(std::uint32_t code) const {
  std::vector<std::uint32_t> c(k);
  for (unsigned i = 0; i < k; ++i) c[i] = (code / place[i]) % p;
  return c;
}

std::uint32_t FieldData::encode(const std::vector<std::uint32_t>& coeffs) const {
  std::uint32_t code = 0;
  for (unsigned i = 0; i < k; ++i) code += (coeffs[i] % p) * place[i];
  return code;
}

std::uint32_t FieldData::add_slow(std::uint32_t a, std::uint32_t b) const {
  if (k == 1) return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) + b) % p);
  std::uint32_t code = 0;
  for (unsigned i = 0; i < k; ++i) {
    const std::uint32_t da = (a / place[i]) % p;
    const std::uint32_t db = (b / place[i]) % p;
    code += ((da + db) % p) * place[i];
  }
  return code;
}

std::uint32_t FieldData::mul_slow(std::uint32_t a, std::uint32_t b) const {
  if (k == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
  const auto ca = decode(a);
  const auto cb = decode(b);
  std::vector<std::uint32_t> prod(2 * k - 1, 0);
  for (unsigned i = 0; i < k; ++i) {
    for (unsigned j = 0; j < k; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % p);
    }
  }
  auto r = poly_mod(std::move(prod), modulus, p);
  r.resize(k, 0);
  return encode(r);
}

std::uint32_t FieldData::inv_slow(std::uint32_t a) const {
  // a^(q-2) by square and multiply.
  std::uint32_t result = k == 1 ? 1u : place[0];
  std::uint32_t base = a;
  std::uint64_t e = q - 2;
  while (e > 0) {
    if (e & 1u) result = mul_slow(result, base);
    base = mul_slow(base, base);
    e >>= 1u;
  }
  return result;
}

std::uint32_t FieldData::add(std::uint32_t a, std::uint32_t b) const {
  if (k == 1) {
    const std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  if (tabulated) return add_table[a * q + b];
  return add_slow(a, b);
}

std::uint32_t FieldData::neg(std::uint32_t a) const {
  if (k == 1) return a == 0 ? 0 : p - a;
  std::uint32_t code = 0;
  for (unsigned i = 0; i < k; ++i) {
    const std::uint32_t d = (a / place[i]) % p;
    code += ((p - d) % p) * place[i];
  }
  return code;
}

std::uint32_t FieldData::mul(std::uint32_t a, std::uint32_t b) const {
  if (tabulated) return mul_table[a * q + b];
  return mul_slow(a, b);
}

std::uint32_t FieldData::inv(std::uint32_t a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (tabulated) return inv_table[a];
  return inv_slow(a);
}

const std::vector<std::int64_t>& FieldData::sqrt_roots() const {
  std::call_once(sqrt_once, [this] {
    sqrt_table.assign(q, -1);
    for (std::uint32_t b = 0; b < q; ++b) {
      const std::uint32_t s = mul(b, b);
      if (sqrt_table[s] < 0) sqrt_table[s] = b;
    }
  });
  return sqrt_table;
}

}  // namespace detail

namespace {

using detail::FieldData;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

const std::map<std::uint64_t, std::vector<std::uint32_t>>& builtin_moduli() {
  static const std::map<std::uint64_t, std::vector<std::uint32_t>> table = {
      {4, {1, 1, 1}},       {8, {1, 1, 0, 1}}, {9, {1, 0, 1}},
      {16, {1, 1, 0, 0, 1}}, {25, {1, 1, 1}},   {27, {1, 2, 0, 1}},
  };
  return table;
}

// Exhaustive trial division by every monic polynomial of degree <= k/2.
bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const std::size_t k = f.size() - 1;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<std::uint32_t> g(d + 1);
      std::uint64_t t = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      g[d] = 1;
      const auto r = poly_mod(f, g, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; })) return false;
    }
  }
  return true;
}

struct Registry {
  std::mutex mutex;
  std::map<std::tuple<int, std::uint32_t, std::vector<std::uint32_t>>, std::unique_ptr<FieldData>> fields;
};

Registry& registry() {
  static Registry* r = new Registry();  // never destroyed: elements hold raw pointers
  return *r;
}

void build_tables(FieldData& f) {
  if (f.kind == FieldKind::rational || f.q > kTableLimit) {
    f.tabulated = false;
    return;
  }
  const std::uint32_t q = f.q;
  f.add_table.resize(static_cast<std::size_t>(q) * q);
  f.mul_table.resize(static_cast<std::size_t>(q) * q);
  f.inv_table.assign(q, 0);
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      f.add_table[a * q + b] = static_cast<std::uint16_t>(f.add_slow(a, b));
      f.mul_table[a * q + b] = static_cast<std::uint16_t>(f.mul_slow(a, b));
    }
  }
  std::uint32_t one = f.k == 1 ? 1 : f.place[0];
  for (std::uint32_t a = 1; a < q; ++a) {
    for (std::uint32_t b = 1; b < q; ++b) {
      if (f.mul_table[a * q + b] == one) {
        f.inv_table[a] = b;
        break;
      }
    }
  }
  f.tabulated = true;
}

const FieldData* intern(FieldKind kind, std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus,
                        bool builtin) {
  auto& reg = registry();
  std::lock_guard lock(reg.mutex);
  auto key = std::make_tuple(static_cast<int>(kind), p, modulus);
  auto it = reg.fields.find(key);
  if (it != reg.fields.end()) return it->second.get();

  auto data = std::make_unique<FieldData>();
  data->kind = kind;
  data->p = p;
  data->k = k;
  data->modulus = std::move(modulus);
  data->builtin_modulus = builtin;
  if (kind != FieldKind::rational) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) q *= p;
    data->q = static_cast<std::uint32_t>(q);
    data->place.assign(k, 1);
    for (unsigned i = 0; i < k; ++i) {
      std::uint32_t v = 1;
      for (unsigned j = i + 1; j < k; ++j) v *= p;
      data->place[i] = v;
    }
  }
  build_tables(*data);
  const FieldData* raw = data.get();
  reg.fields.emplace(std::move(key), std::move(data));
  return raw;
}

std::uint64_t checked_power(std::uint32_t p, unsigned k) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldSize) throw Error(ErrorCode::FieldTooLarge, "field larger than 2^20 elements");
  }
  return q;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  checked_power(p, 1);
  return Field(intern(FieldKind::prime, p, 1, {}, false));
}

Field Field::extension(std::uint32_t p, unsigned k, std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (k == 0) throw Error(ErrorCode::PreconditionViolated, "extension degree must be >= 1");
  const std::uint64_t q = checked_power(p, k);
  if (k == 1 && !modulus) return prime(p);
  bool builtin = false;
  std::vector<std::uint32_t> mod;
  const auto& table = builtin_moduli();
  if (modulus) {
    mod = *modulus;
    if (mod.size() != k + 1 || mod.back() != 1) {
      throw Error(ErrorCode::ReducibleModulus, "modulus must be monic of degree " + std::to_string(k));
    }
    for (auto c : mod) {
      if (c >= p) throw Error(ErrorCode::ReducibleModulus, "modulus coefficient out of range");
    }
    if (!is_irreducible(mod, p)) throw Error(ErrorCode::ReducibleModulus, "modulus is reducible");
    auto it = table.find(q);
    builtin = it != table.end() && it->second == mod;
  } else {
    auto it = table.find(q);
    if (it == table.end()) {
      throw Error(ErrorCode::NoBuiltinModulus, "no built-in modulus for GF(" + std::to_string(q) + ")");
    }
    mod = it->second;
    builtin = true;
  }
  if (k == 1) {
    // A degree-one modulus describes the prime field itself.
    return prime(p);
  }
  return Field(intern(FieldKind::extension, p, k, std::move(mod), builtin));
}

Field Field::rationals() { return Field(intern(FieldKind::rational, 0, 1, {}, false)); }

Field Field::galois(std::uint64_t q) {
  if (q > kMaxFieldSize) throw Error(ErrorCode::FieldTooLarge, "field larger than 2^20 elements");
  if (is_prime(q)) return prime(static_cast<std::uint32_t>(q));
  for (std::uint32_t p = 2; p * p <= q; ++p) {
    if (q % p != 0) continue;
    if (!is_prime(p)) continue;
    unsigned k = 0;
    std::uint64_t t = q;
    while (t % p == 0) {
      t /= p;
      ++k;
    }
    if (t != 1) break;
    return extension(p, k);
  }
  throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
}

Field Field::make(FieldKind kind, std::uint32_t p, unsigned k, std::optional<std::vector<std::uint32_t>> modulus) {
  switch (kind) {
    case FieldKind::prime: return prime(p);
    case FieldKind::extension: return extension(p, k, std::move(modulus));
    case FieldKind::rational: return rationals();
  }
  throw Error(ErrorCode::Internal, "unknown field kind");
}

std::optional<std::uint64_t> Field::size() const {
  if (!is_finite()) return std::nullopt;
  return data_->q;
}

std::uint32_t Field::order() const {
  if (!is_finite()) throw Error(ErrorCode::UnsupportedField, "Q has no finite order");
  return data_->q;
}

Element Field::zero() const { return is_finite() ? Element(*this, 0u) : Element(*this, Rational(0)); }

Element Field::one() const {
  if (!is_finite()) return Element(*this, Rational(1));
  return Element(*this, data_->k == 1 ? 1u : data_->place[0]);
}

Element Field::from_int(long long value) const {
  if (!is_finite()) return Element(*this, Rational(value));
  const long long p = data_->p;
  long long r = value % p;
  if (r < 0) r += p;
  const auto residue = static_cast<std::uint32_t>(r);
  return Element(*this, data_->k == 1 ? residue : residue * data_->place[0]);
}

Element Field::from_rational(const Rational& value) const {
  if (!is_finite()) return Element(*this, value);
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  const BigInt p = data_->p;
  BigInt rn = num % p;
  if (rn < 0) rn += p;
  BigInt rd = den % p;
  if (rd < 0) rd += p;
  if (rd == 0) throw Error(ErrorCode::DivisionByZero, "denominator divisible by the characteristic");
  return from_int(rn.convert_to<long long>()) / from_int(rd.convert_to<long long>());
}

Element Field::from_code(std::uint32_t code) const {
  if (!is_finite() || code >= data_->q) {
    throw Error(ErrorCode::PreconditionViolated, "element code out of range");
  }
  return Element(*this, code);
}

Element Field::from_coefficients(const std::vector<std::uint32_t>& coeffs) const {
  if (!is_finite() || coeffs.size() != data_->k) {
    throw Error(ErrorCode::PreconditionViolated, "coefficient vector does not match the field degree");
  }
  for (auto c : coeffs) {
    if (c >= data_->p) throw Error(ErrorCode::PreconditionViolated, "coefficient out of range");
  }
  return Element(*this, data_->encode(coeffs));
}

std::vector<Element> Field::elements() const {
  if (!is_finite()) throw Error(ErrorCode::UnsupportedField, "cannot enumerate Q");
  std::vector<Element> out;
  out.reserve(data_->q);
  for (std::uint32_t c = 0; c < data_->q; ++c) out.emplace_back(*this, c);
  return out;
}

std::vector<Element> Field::scan_nonzero(std::size_t limit) const {
  std::vector<Element> out;
  if (is_finite()) {
    out.reserve(data_->q - 1);
    for (std::uint32_t c = 1; c < data_->q; ++c) out.emplace_back(*this, c);
  } else {
    for (std::size_t i = 1; i <= limit; ++i) out.emplace_back(*this, Rational(static_cast<long long>(i)));
  }
  return out;
}

std::string Field::to_string() const {
  switch (data_->kind) {
    case FieldKind::prime: return "GF(" + std::to_string(data_->p) + ")";
    case FieldKind::rational: return "Q";
    case FieldKind::extension: {
      std::string s = "GF(" + std::to_string(data_->q);
      if (!data_->builtin_modulus) {
        s += ";";
        for (std::size_t i = 0; i < data_->modulus.size(); ++i) {
          if (i) s += ",";
          s += std::to_string(data_->modulus[i]);
        }
      }
      return s + ")";
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------

void Element::require_same(const Element& o) const {
  if (field_ != o.field_) throw Error(ErrorCode::FieldMismatch, "operands belong to different fields");
}

bool Element::is_zero() const {
  if (const auto* c = std::get_if<std::uint32_t>(&value_)) return *c == 0;
  return std::get<Rational>(value_) == 0;
}

bool Element::is_one() const {
  if (const auto* c = std::get_if<std::uint32_t>(&value_)) {
    return *c == (field_->k == 1 ? 1u : field_->place[0]);
  }
  return std::get<Rational>(value_) == 1;
}

std::uint32_t Element::code() const {
  if (const auto* c = std::get_if<std::uint32_t>(&value_)) return *c;
  throw Error(ErrorCode::UnsupportedField, "rational elements have no code");
}

const Rational& Element::rational() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  throw Error(ErrorCode::UnsupportedField, "finite field element is not rational");
}

std::vector<std::uint32_t> Element::coefficients() const { return field_->decode(code()); }

Element& Element::operator+=(const Element& o) {
  require_same(o);
  if (auto* c = std::get_if<std::uint32_t>(&value_)) {
    *c = field_->add(*c, std::get<std::uint32_t>(o.value_));
  } else {
    std::get<Rational>(value_) += std::get<Rational>(o.value_);
  }
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same(o);
  if (auto* c = std::get_if<std::uint32_t>(&value_)) {
    *c = field_->sub(*c, std::get<std::uint32_t>(o.value_));
  } else {
    std::get<Rational>(value_) -= std::get<Rational>(o.value_);
  }
  return *this;
}

Element& Element::operator*=(const Element& o) {
  require_same(o);
  if (auto* c = std::get_if<std::uint32_t>(&value_)) {
    *c = field_->mul(*c, std::get<std::uint32_t>(o.value_));
  } else {
    std::get<Rational>(value_) *= std::get<Rational>(o.value_);
  }
  return *this;
}

Element& Element::operator/=(const Element& o) {
  require_same(o);
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  if (auto* c = std::get_if<std::uint32_t>(&value_)) {
    *c = field_->mul(*c, field_->inv(std::get<std::uint32_t>(o.value_)));
  } else {
    std::get<Rational>(value_) /= std::get<Rational>(o.value_);
  }
  return *this;
}

Element Element::operator-() const {
  Element r = *this;
  if (auto* c = std::get_if<std::uint32_t>(&r.value_)) {
    *c = field_->neg(*c);
  } else {
    auto& v = std::get<Rational>(r.value_);
    v = -v;
  }
  return r;
}

Element Element::inv() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  Element r = *this;
  if (auto* c = std::get_if<std::uint32_t>(&r.value_)) {
    *c = field_->inv(*c);
  } else {
    auto& v = std::get<Rational>(r.value_);
    v = 1 / v;
  }
  return r;
}

Element Element::pow(long long exponent) const {
  Element base = exponent < 0 ? inv() : *this;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-(exponent + 1)) + 1
                                      : static_cast<unsigned long long>(exponent);
  Element result = field().one();
  while (e > 0) {
    if (e & 1ull) result *= base;
    e >>= 1ull;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const Element& a, const Element& b) { return a.field_ == b.field_ && a.value_ == b.value_; }

std::string Element::to_string() const {
  if (const auto* r = std::get_if<Rational>(&value_)) {
    const BigInt num = boost::multiprecision::numerator(*r);
    const BigInt den = boost::multiprecision::denominator(*r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
  }
  const auto c = std::get<std::uint32_t>(value_);
  if (field_->k == 1) return std::to_string(c);
  const auto coeffs = field_->decode(c);
  std::string s = "(";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coeffs[i]);
  }
  return s + ")";
}

bool canonical_less(const Element& a, const Element& b) {
  if (a.field() != b.field()) throw Error(ErrorCode::FieldMismatch, "cannot order elements of different fields");
  if (a.field().is_finite()) return a.code() < b.code();
  return a.rational() < b.rational();
}

std::optional<Element> sqrt(const Element& a) {
  const Field f = a.field();
  if (f.is_finite()) {
    const auto& roots = f.data()->sqrt_roots();
    const std::int64_t r = roots[a.code()];
    if (r < 0) return std::nullopt;
    return f.from_code(static_cast<std::uint32_t>(r));
  }
  const Rational& v = a.rational();
  if (v < 0) return std::nullopt;
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  const BigInt rn = boost::multiprecision::sqrt(num);
  const BigInt rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return f.from_rational(Rational(rn, rd));
}

bool is_square(const Element& a) { return sqrt(a).has_value(); }

std::optional<std::pair<Element, Element>> sum_of_two_nonzero_squares(const Element& target) {
  const Field f = target.field();
  if (!f.is_finite()) {
    // Q is ordered: a negative target is never a sum of squares. For other
    // targets try small positive rationals i/j.
    if (target.rational() <= 0) return std::nullopt;
    for (long long j = 1; j <= 16; ++j) {
      for (long long i = 1; i <= 16; ++i) {
        const Element a = f.from_rational(Rational(i, j));
        const Element rest = target - a * a;
        if (rest.is_zero()) continue;
        if (auto b = sqrt(rest)) return std::make_pair(a, *b);
      }
    }
    return std::nullopt;
  }
  for (const Element& a : f.scan_nonzero()) {
    const Element rest = target - a * a;
    if (rest.is_zero()) continue;
    if (auto b = sqrt(rest)) return std::make_pair(a, *b);
  }
  return std::nullopt;
}

bool minus_one_is_square(Field field) { return is_square(-field.one()); }

namespace {

bool too_small_for_pairs(const Field& f) {
  if (!f.is_finite()) return false;
  const auto q = f.order();
  return q == 2 || q == 3 || q == 5;
}

}  // namespace

SquareClassData square_class_pairing(Field field, std::size_t min_pairs) {
  if (too_small_for_pairs(field)) {
    throw Error(ErrorCode::FieldTooSmall, "square class pairing needs |F| not in {2,3,5}");
  }
  SquareClassData data{field, !field.is_finite(), {}, {}, {}};
  const Element one = field.one();
  const Element minus_one = -one;
  if (!field.is_finite()) {
    // -1 is not a square over Q, so E = {1}.
    data.exceptional.push_back(one);
    for (std::size_t i = 0; i < min_pairs; ++i) {
      const auto m = static_cast<long long>(i + 2);
      const Element a = field.from_int(m * m);
      data.pairs.emplace_back(a, a.inv());
    }
    return data;
  }
  std::vector<bool> is_sq(field.order(), false);
  for (const Element& a : field.scan_nonzero()) is_sq[(a * a).code()] = true;
  for (std::uint32_t c = 1; c < field.order(); ++c) {
    if (is_sq[c]) data.squares.push_back(field.from_code(c));
  }
  data.exceptional.push_back(one);
  if (field.characteristic() != 2 && is_sq[minus_one.code()]) data.exceptional.push_back(minus_one);
  std::sort(data.exceptional.begin(), data.exceptional.end(), canonical_less);

  std::vector<bool> used(field.order(), false);
  for (const Element& e : data.exceptional) used[e.code()] = true;
  for (const Element& s : data.squares) {
    if (used[s.code()]) continue;
    const Element t = s.inv();
    used[s.code()] = true;
    used[t.code()] = true;
    data.pairs.emplace_back(s, t);
  }
  return data;
}

Element square_ne_inverse_witness(Field field) {
  if (too_small_for_pairs(field)) {
    throw Error(ErrorCode::FieldTooSmall, "every nonzero b has b^2 = b^-2 when |F| is 2, 3 or 5");
  }
  for (const Element& b : field.scan_nonzero()) {
    const Element b2 = b * b;
    if (b2 != b2.inv()) return b;
  }
  throw Error(ErrorCode::Internal, "no witness b with b^2 != b^-2");
}

}  // namespace unicomm
