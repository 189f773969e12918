#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "test_util.hpp"
#include "unicomm/error.hpp"
#include "unicomm/field.hpp"
#include "unicomm/random.hpp"

using namespace unicomm;

namespace {

// Schoolbook product of coefficient vectors reduced by a monic modulus, all
// mod p. Independent of the library's tables.
std::vector<std::uint32_t> ref_mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                   const std::vector<std::uint32_t>& modulus, std::uint32_t p) {
  const std::size_t k = modulus.size() - 1;
  std::vector<std::uint64_t> prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  }
  for (std::size_t d = 2 * k - 1; d >= k; --d) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - c) * modulus[i]) % p;
  }
  return {prod.begin(), prod.begin() + static_cast<long>(k)};
}

const std::vector<std::uint64_t> kSmallQ{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 49, 81};

// GF(q) with the built-in modulus when there is one, otherwise the first
// irreducible x^k + c_{k-1} x^{k-1} + ... + c_0 found by trial.
Field field_of(std::uint64_t q) {
  if (q != 49 && q != 81) return Field::galois(q);
  const std::uint32_t p = q == 49 ? 7 : 3;
  const unsigned k = q == 49 ? 2 : 4;
  std::vector<std::uint32_t> mod(k + 1, 0);
  mod[k] = 1;
  for (std::uint32_t code = 1;; ++code) {
    std::uint32_t c = code;
    for (unsigned i = 0; i < k; ++i, c /= p) mod[i] = c % p;
    try {
      return Field::extension(p, k, mod);
    } catch (const Error&) {
    }
  }
}

}  // namespace

TEST(FieldConstruction, PrimeAndBuiltinExtensions) {
  const Field f7 = Field::prime(7);
  EXPECT_EQ(f7.order(), 7u);
  EXPECT_EQ(f7.characteristic(), 7u);
  EXPECT_EQ(f7.to_string(), "GF(7)");

  const Field f4 = Field::extension(2, 2);
  EXPECT_EQ(f4.order(), 4u);
  EXPECT_EQ(f4.modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(f4, Field::galois(4));

  const std::vector<std::pair<std::uint64_t, std::vector<std::uint32_t>>> builtin{
      {4, {1, 1, 1}}, {8, {1, 1, 0, 1}}, {9, {1, 0, 1}}, {16, {1, 1, 0, 0, 1}}, {25, {1, 1, 1}}, {27, {1, 2, 0, 1}}};
  for (const auto& [q, mod] : builtin) EXPECT_EQ(Field::galois(q).modulus(), mod) << q;
}

TEST(FieldConstruction, ExplicitModulusForGF9) {
  // x^2 + 1 has no root mod 3: 0+1, 1+1, 4+1 are 1, 2, 2.
  for (std::uint32_t x = 0; x < 3; ++x) EXPECT_NE((x * x + 1) % 3, 0u);
  const Field f = Field::extension(3, 2, std::vector<std::uint32_t>{1, 0, 1});
  EXPECT_EQ(f.order(), 9u);
  EXPECT_EQ(f, Field::galois(9));
}

TEST(FieldConstruction, Errors) {
  EXPECT_EQ(code_of([] { (void)Field::prime(6); }), ErrorCode::NotPrime);
  EXPECT_EQ(code_of([] { (void)Field::prime(1); }), ErrorCode::NotPrime);
  // x^2 + 1 = (x + 1)^2 over GF(2).
  EXPECT_EQ(code_of([] { (void)Field::extension(2, 2, std::vector<std::uint32_t>{1, 0, 1}); }),
            ErrorCode::ReducibleModulus);
  // x^4 + x^2 + 1 = (x^2 + x + 1)^2 over GF(2): no roots but reducible.
  EXPECT_EQ(code_of([] { (void)Field::extension(2, 4, std::vector<std::uint32_t>{1, 0, 1, 0, 1}); }),
            ErrorCode::ReducibleModulus);
  EXPECT_EQ(code_of([] { (void)Field::extension(2, 7); }), ErrorCode::NoBuiltinModulus);
  EXPECT_EQ(code_of([] { (void)Field::galois(12); }), ErrorCode::NotPrime);
  EXPECT_EQ(code_of([] { (void)Field::prime(2097169); }), ErrorCode::FieldTooLarge);
}

TEST(FieldArithmetic, KnownValues) {
  const Field f5 = Field::prime(5);
  EXPECT_EQ(f5.from_int(2).inv(), f5.from_int(3));

  const Field f4 = Field::galois(4);
  const Element g = f4.from_coefficients({0, 1});
  EXPECT_EQ(g * g, g + f4.one());

  const Field q = Field::rationals();
  const Element half = q.one() / q.from_int(-2);
  EXPECT_EQ(half.rational(), Rational(-1, 2));
  EXPECT_EQ(half.to_string(), "-1/2");
}

TEST(FieldArithmetic, Errors) {
  const Field f5 = Field::prime(5);
  EXPECT_EQ(code_of([&] { (void)f5.zero().inv(); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([&] { (void)(f5.one() / f5.zero()); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([&] { (void)(f5.one() + Field::prime(7).one()); }), ErrorCode::FieldMismatch);
  EXPECT_EQ(code_of([] { (void)Field::rationals().zero().inv(); }), ErrorCode::DivisionByZero);
}

TEST(FieldArithmetic, MatchesReferencePolynomialProduct) {
  for (std::uint64_t q : {4u, 8u, 9u, 16u, 25u, 27u}) {
    const Field f = field_of(q);
    const auto els = f.elements();
    for (const Element& a : els) {
      for (const Element& b : els) {
        const auto expect = ref_mul(a.coefficients(), b.coefficients(), f.modulus(), f.characteristic());
        ASSERT_EQ((a * b).coefficients(), expect) << f.to_string() << " " << a.to_string() << "*" << b.to_string();
        std::vector<std::uint32_t> sum(f.degree());
        for (unsigned i = 0; i < f.degree(); ++i) {
          sum[i] = (a.coefficients()[i] + b.coefficients()[i]) % f.characteristic();
        }
        ASSERT_EQ((a + b).coefficients(), sum);
      }
    }
  }
}

TEST(FieldArithmetic, FieldAxiomsOnRandomTriples) {
  Rng rng(11);
  for (std::uint64_t q : kSmallQ) {
    const Field f = field_of(q);
    for (int s = 0; s < 300; ++s) {
      const Element a = random_element(f, rng), b = random_element(f, rng), c = random_element(f, rng);
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ((a + b) + c, a + (b + c));
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a - a, f.zero());
      ASSERT_EQ(a + (-a), f.zero());
      if (!b.is_zero()) {
        ASSERT_EQ(a / b * b, a);
        ASSERT_EQ(b.pow(-1), b.inv());
      }
    }
  }
}

TEST(FieldArithmetic, MultiplicativeGroupIsCyclic) {
  for (std::uint64_t q : kSmallQ) {
    const Field f = field_of(q);
    const long long order = static_cast<long long>(q) - 1;
    bool generator_found = false;
    for (const Element& x : f.elements()) {
      if (x.is_zero()) continue;
      ASSERT_TRUE(x.pow(order).is_one()) << f.to_string() << " " << x.to_string();
      long long ord = 1;
      for (Element y = x; !y.is_one(); y *= x) ++ord;
      generator_found = generator_found || ord == order;
    }
    EXPECT_TRUE(generator_found) << f.to_string();
  }
}

TEST(FieldOrder, CanonicalOrderMatchesCoefficients) {
  const Field f9 = Field::galois(9);
  const auto els = f9.elements();
  for (std::size_t i = 0; i + 1 < els.size(); ++i) {
    EXPECT_TRUE(canonical_less(els[i], els[i + 1]));
    EXPECT_LT(els[i].coefficients(), els[i + 1].coefficients());
  }
  const Field q = Field::rationals();
  EXPECT_TRUE(canonical_less(q.from_int(-3), q.from_rational(Rational(1, 2))));
}

TEST(SquareRoot, KnownValues) {
  const Field f5 = Field::prime(5);
  EXPECT_EQ(*sqrt(f5.from_int(4)), f5.from_int(2));
  EXPECT_FALSE(sqrt(f5.from_int(2)).has_value());
  const Field q = Field::rationals();
  EXPECT_EQ(*sqrt(q.from_rational(Rational(9, 4))), q.from_rational(Rational(3, 2)));
  EXPECT_FALSE(sqrt(q.from_int(2)).has_value());
  EXPECT_FALSE(sqrt(q.from_int(-4)).has_value());
}

TEST(SquareRoot, AgreesWithExhaustiveScan) {
  for (std::uint64_t q : kSmallQ) {
    const Field f = field_of(q);
    const auto els = f.elements();
    for (const Element& a : els) {
      if (a.is_zero()) continue;
      std::optional<Element> first;
      for (const Element& b : els) {
        if (b * b == a) {
          first = b;
          break;
        }
      }
      const auto r = sqrt(a);
      ASSERT_EQ(r.has_value(), first.has_value()) << f.to_string() << " " << a.to_string();
      if (r) {
        EXPECT_EQ(*r * *r, a);
        EXPECT_EQ(*r, *first) << "not the canonically smallest root";
      }
      EXPECT_EQ(is_square(a), first.has_value());
    }
  }
}

TEST(SquareRoot, SquareCountFormula) {
  for (std::uint64_t q : kSmallQ) {
    const Field f = field_of(q);
    std::set<std::uint32_t> squares;
    for (const Element& a : f.elements()) {
      if (!a.is_zero()) squares.insert((a * a).code());
    }
    const std::size_t expect = q % 2 == 0 ? q - 1 : (q - 1) / 2;
    EXPECT_EQ(squares.size(), expect) << q;
  }
}

TEST(SumOfSquares, KnownValues) {
  const Field f3 = Field::prime(3);
  const auto r3 = sum_of_two_nonzero_squares(-f3.one());
  ASSERT_TRUE(r3);
  EXPECT_TRUE(r3->first.is_one() && r3->second.is_one());

  EXPECT_FALSE(sum_of_two_nonzero_squares(-Field::prime(5).one()));
  EXPECT_FALSE(sum_of_two_nonzero_squares(-Field::rationals().one()));

  for (std::uint64_t q : {3u, 7u, 9u, 13u}) {
    const Field f = field_of(q);
    const auto r = sum_of_two_nonzero_squares(-f.one());
    ASSERT_TRUE(r) << q;
    EXPECT_FALSE(r->first.is_zero() || r->second.is_zero());
    EXPECT_EQ(r->first * r->first + r->second * r->second, -f.one());
  }
}

TEST(SumOfSquares, AgreesWithExhaustiveScan) {
  for (std::uint64_t q : kSmallQ) {
    const Field f = field_of(q);
    const auto els = f.elements();
    for (const Element& t : els) {
      bool exists = false;
      for (const Element& a : els) {
        for (const Element& b : els) exists = exists || (!a.is_zero() && !b.is_zero() && a * a + b * b == t);
      }
      EXPECT_EQ(sum_of_two_nonzero_squares(t).has_value(), exists) << f.to_string() << " " << t.to_string();
    }
  }
}

TEST(SquareClasses, KnownValues) {
  const Field f7 = Field::prime(7);
  const SquareClassData d7 = square_class_pairing(f7);
  EXPECT_EQ(d7.exceptional, std::vector<Element>{f7.one()});
  ASSERT_EQ(d7.pairs.size(), 1u);
  EXPECT_EQ(d7.pairs[0].first, f7.from_int(2));
  EXPECT_EQ(d7.pairs[0].second, f7.from_int(4));

  const SquareClassData d8 = square_class_pairing(Field::galois(8));
  EXPECT_EQ(d8.exceptional.size(), 1u);
  EXPECT_EQ(d8.pairs.size(), 3u);

  const Field f9 = Field::galois(9);
  const SquareClassData d9 = square_class_pairing(f9);
  EXPECT_EQ(d9.exceptional.size(), 2u);
  EXPECT_EQ(d9.pairs.size(), 1u);

  for (std::uint64_t q : {2u, 3u, 5u}) {
    EXPECT_EQ(code_of([&] { (void)square_class_pairing(Field::galois(q)); }), ErrorCode::FieldTooSmall);
  }
}

TEST(SquareClasses, PartitionProperties) {
  for (std::uint64_t q : {4u, 7u, 8u, 9u, 11u, 13u, 16u, 25u, 27u, 49u, 81u}) {
    const Field f = field_of(q);
    const SquareClassData d = square_class_pairing(f);
    std::multiset<std::uint32_t> covered;
    for (const auto& e : d.exceptional) covered.insert(e.code());
    for (const auto& [a, b] : d.pairs) {
      EXPECT_NE(a, b);
      EXPECT_TRUE((a * b).is_one());
      covered.insert(a.code());
      covered.insert(b.code());
    }
    std::multiset<std::uint32_t> squares;
    for (const auto& s : d.squares) squares.insert(s.code());
    EXPECT_EQ(covered, squares) << q;
    EXPECT_EQ(std::set<std::uint32_t>(covered.begin(), covered.end()).size(), covered.size());
    std::size_t k;
    if (q % 2 == 0) k = (q - 2) / 2;
    else if (minus_one_is_square(f)) k = (q - 5) / 4;
    else k = (q - 3) / 4;
    EXPECT_EQ(d.pairs.size(), k) << q;
  }
}

TEST(SquareClasses, RationalStream) {
  const Field q = Field::rationals();
  const SquareClassData d = square_class_pairing(q, 3);
  EXPECT_TRUE(d.infinite);
  EXPECT_EQ(d.exceptional, std::vector<Element>{q.one()});
  ASSERT_GE(d.pairs.size(), 3u);
  EXPECT_EQ(d.pairs[0].first, q.from_int(4));
  EXPECT_EQ(d.pairs[2].second, q.from_rational(Rational(1, 16)));
}

TEST(SquareWitness, KnownValues) {
  const Field f7 = Field::prime(7);
  EXPECT_EQ(square_ne_inverse_witness(f7), f7.from_int(2));
  const Field f4 = Field::galois(4);
  EXPECT_EQ(square_ne_inverse_witness(f4), f4.from_coefficients({0, 1}));
  const Field q = Field::rationals();
  EXPECT_EQ(square_ne_inverse_witness(q), q.from_int(2));
  EXPECT_EQ(code_of([] { (void)square_ne_inverse_witness(Field::prime(5)); }), ErrorCode::FieldTooSmall);
}

TEST(SquareWitness, IsFirstHitInScanOrder) {
  for (std::uint64_t q : {4u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    const Field f = field_of(q);
    const Element b = square_ne_inverse_witness(f);
    EXPECT_FALSE(b.pow(4).is_one());
    for (const Element& c : f.elements()) {
      if (c == b) break;
      if (!c.is_zero()) EXPECT_TRUE(c.pow(4).is_one());
    }
  }
}
