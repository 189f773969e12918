#include <gtest/gtest.h>

#include <set>

#include "test_util.hpp"
#include "unicomm/certificate.hpp"
#include "unicomm/error.hpp"
#include "unicomm/factor_sln.hpp"
#include "unicomm/random.hpp"

using namespace unicomm;

namespace {

// P (I + N) P^-1 with N a nonzero rank-one square-zero matrix.
Matrix random_u2(Field f, std::size_t n, Rng& rng) {
  Matrix m = Matrix::identity(f, n);
  m(0, n - 1) = random_nonzero(f, rng);
  const Matrix p = random_sl(f, n, rng);
  return p * m * p.inverse();
}

bool has_failure(const Report& r, const std::string& detail) {
  for (const auto& e : r.entries) {
    if (!e.ok && e.detail == detail) return true;
  }
  return false;
}

Factorization random_certificate(Field f, std::size_t n, std::size_t pairs, Rng& rng) {
  Factorization out = identity_certificate(f, n);
  out.route = {"test"};
  for (std::size_t i = 0; i < pairs; ++i) {
    const Matrix x = random_u2(f, n, rng), y = random_u2(f, n, rng);
    out.pairs.push_back({x, y});
    out.target = out.target * commutator(x, y);
  }
  return out;
}

}  // namespace

TEST(UnipotentIndex, KnownValues) {
  const Field f5 = Field::prime(5);
  EXPECT_TRUE(is_unipotent_index(Matrix::jordan_block(2, f5.one()), 2));
  EXPECT_FALSE(is_unipotent_index(Matrix::identity(f5, 3), 2));
  EXPECT_TRUE(is_unipotent_index(Matrix::identity(f5, 3), 1));
  EXPECT_TRUE(is_u2(Matrix::from_ints(f5, {{2, 1}, {-1, 0}})));
  EXPECT_TRUE(is_unipotent_index(Matrix::jordan_block(3, f5.one()), 3));
  EXPECT_FALSE(is_u2(Matrix::jordan_block(3, f5.one())));
}

TEST(UnipotentIndex, ParameterizationCoversAllU2InSL2) {
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u}) {
    const Field f = Field::galois(q);
    const auto els = f.elements();
    std::size_t count = 0;
    for (const Element& a : els) {
      for (const Element& b : els) {
        for (const Element& c : els) {
          for (const Element& d : els) {
            const Matrix m = Matrix::from_rows(f, {{a, b}, {c, d}});
            if (!(a * d - b * c).is_one() || !is_u2(m)) continue;
            ++count;
            const U2Type t = classify_u2_sl2(m);
            EXPECT_EQ(t.a * t.a + t.b * t.c, f.zero());
            EXPECT_EQ(m, Matrix::from_rows(f, {{f.one() + t.a, t.b}, {t.c, f.one() - t.a}}));
          }
        }
      }
    }
    EXPECT_EQ(count, q * q - 1) << q;
  }
}

TEST(U2Classification, KnownValues) {
  const Field f5 = Field::prime(5);
  const U2Type up = classify_u2_sl2(Matrix::from_ints(f5, {{1, 3}, {0, 1}}));
  EXPECT_EQ(up.tag, U2Tag::type_i_upper);
  EXPECT_EQ(up.b, f5.from_int(3));
  const U2Type low = classify_u2_sl2(Matrix::from_ints(f5, {{1, 0}, {2, 1}}));
  EXPECT_EQ(low.tag, U2Tag::type_i_lower);
  EXPECT_EQ(low.c, f5.from_int(2));
  const U2Type two = classify_u2_sl2(Matrix::from_ints(f5, {{2, 1}, {4, 0}}));
  EXPECT_EQ(two.tag, U2Tag::type_ii);
  EXPECT_EQ(two.a, f5.one());
  EXPECT_EQ(two.b, f5.one());
  EXPECT_EQ(two.c, f5.from_int(4));
  EXPECT_THROW((void)classify_u2_sl2(Matrix::identity(f5, 2)), Error);
  EXPECT_THROW((void)classify_u2_sl2(Matrix::from_ints(f5, {{2, 0}, {0, 3}})), Error);
}

TEST(Commutator, KnownValues) {
  const Field f7 = Field::prime(7);
  EXPECT_TRUE(commutator(Matrix::identity(f7, 2), Matrix::identity(f7, 2)).is_identity());
  EXPECT_EQ(commutator(Matrix::from_ints(f7, {{1, 1}, {0, 1}}), Matrix::from_ints(f7, {{5, 5}, {1, 4}})),
            Matrix::from_ints(f7, {{0, 6}, {1, 3}}));
  const Field f5 = Field::prime(5);
  EXPECT_EQ(commutator(Matrix::from_ints(f5, {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}),
                       Matrix::from_ints(f5, {{1, 0, 0}, {-1, 1, 0}, {0, 0, 1}})),
            direct_sum(Matrix::identity(f5, 1), Matrix::jordan_block(2, f5.one())));
  EXPECT_THROW((void)commutator(Matrix::identity(f5, 2), Matrix::from_ints(f5, {{1, 2}, {2, 4}})), Error);
}

TEST(Commutator, RandomPairsHaveDeterminantOne) {
  Rng rng(31);
  for (std::uint64_t q : {3u, 4u, 5u, 7u, 9u}) {
    const Field f = Field::galois(q);
    for (int s = 0; s < 1000; ++s) {
      const std::size_t n = 2 + s % 3;
      const Matrix x = random_u2(f, n, rng), y = random_u2(f, n, rng);
      ASSERT_TRUE(is_u2(x) && is_u2(y));
      ASSERT_TRUE(commutator(x, y).determinant().is_one());
      ASSERT_TRUE(is_u2(y * x.inverse() * y.inverse()));
    }
  }
}

TEST(Commutator, OnlyScalarValueIsIdentity) {
  // Exhaustive over U2 pairs in SL_2(GF(q)).
  for (std::uint64_t q : {3u, 5u}) {
    const Field f = Field::galois(q);
    const auto els = f.elements();
    std::vector<Matrix> u2;
    for (const Element& a : els) {
      for (const Element& b : els) {
        for (const Element& c : els) {
          if ((a.is_zero() && b.is_zero() && c.is_zero()) || !(a * a + b * c).is_zero()) continue;
          u2.push_back(Matrix::from_rows(f, {{f.one() + a, b}, {c, f.one() - a}}));
        }
      }
    }
    ASSERT_EQ(u2.size(), q * q - 1);
    for (const Matrix& x : u2) {
      for (const Matrix& y : u2) {
        const Matrix v = commutator(x, y);
        if (v.is_scalar()) ASSERT_TRUE(v.is_identity()) << x.to_string() << " " << y.to_string();
      }
    }
  }
}

TEST(Transport, InvertTwiceIsIdentity) {
  Rng rng(32);
  const Field f = Field::prime(7);
  for (int s = 0; s < 50; ++s) {
    const Factorization c = random_certificate(f, 3, 1 + s % 3, rng);
    const Factorization inv = invert(c);
    ASSERT_TRUE(verify(inv).ok);
    ASSERT_EQ(inv.target, c.target.inverse());
    ASSERT_EQ(inv.size(), c.size());
    const Factorization back = invert(inv);
    ASSERT_EQ(back.target, c.target);
    for (std::size_t i = 0; i < c.size(); ++i) {
      ASSERT_EQ(back.pairs[i].x, c.pairs[i].x);
      ASSERT_EQ(back.pairs[i].y, c.pairs[i].y);
    }
  }
}

TEST(Transport, ConjugateRoundTrip) {
  Rng rng(33);
  const Field f = Field::galois(9);
  for (int s = 0; s < 50; ++s) {
    const Factorization c = random_certificate(f, 3, 2, rng);
    const Matrix p = random_sl(f, 3, rng);
    const Factorization moved = conjugate(c, p);
    ASSERT_TRUE(verify(moved).ok);
    ASSERT_EQ(moved.target, p * c.target * p.inverse());
    const Factorization back = conjugate(moved, p.inverse());
    for (std::size_t i = 0; i < c.size(); ++i) {
      ASSERT_EQ(back.pairs[i].x, c.pairs[i].x);
      ASSERT_EQ(back.pairs[i].y, c.pairs[i].y);
    }
  }
}

TEST(Transport, ConjugateByPermutation) {
  const Field f5 = Field::prime(5);
  const Matrix perm = Matrix::from_ints(f5, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  const Factorization c = conjugate(i_plus_j21(f5), perm);
  EXPECT_TRUE(verify(c).ok);
  EXPECT_EQ(c.target, perm * direct_sum(Matrix::identity(f5, 1), Matrix::jordan_block(2, f5.one())) * perm.inverse());
}

TEST(Transport, DirectSumTakesTheLongerLength) {
  Rng rng(34);
  const Field f = Field::prime(5);
  const Factorization two = random_certificate(f, 2, 2, rng);
  const Factorization one = random_certificate(f, 3, 1, rng);
  const Factorization sum = direct_sum(two, one);
  EXPECT_EQ(sum.size(), 2u);
  EXPECT_EQ(sum.target, direct_sum(two.target, one.target));
  EXPECT_TRUE(verify(sum).ok);
  EXPECT_EQ(direct_sum(one, two).size(), 2u);

  const Factorization with_identity = direct_sum(identity_certificate(f, 2), one);
  EXPECT_EQ(with_identity.size(), 1u);
  EXPECT_TRUE(verify(with_identity).ok);
  EXPECT_EQ(with_identity.route, one.route);

  const Factorization padded = pad(i_plus_j21(f), 2, 0);
  EXPECT_EQ(padded.target, direct_sum(Matrix::identity(f, 3), Matrix::jordan_block(2, f.one())));
  EXPECT_TRUE(verify(padded).ok);
}

TEST(Transport, ConcatenateMultipliesTargets) {
  Rng rng(35);
  const Field f = Field::prime(7);
  const Factorization a = random_certificate(f, 3, 1, rng);
  const Factorization b = random_certificate(f, 3, 2, rng);
  const Factorization ab = concatenate(a, b);
  EXPECT_EQ(ab.size(), 3u);
  EXPECT_EQ(ab.target, a.target * b.target);
  EXPECT_TRUE(verify(ab).ok);
}

TEST(Verify, ReportsEachKindOfFailure) {
  const Field f = Field::prime(5);
  const Matrix u = Matrix::from_ints(f, {{1, 1}, {0, 1}});
  const Matrix l1 = Matrix::from_ints(f, {{1, 0}, {1, 1}});
  const Matrix l2 = Matrix::from_ints(f, {{1, 0}, {2, 1}});
  Factorization good{commutator(u, l1) * commutator(l2, u), {{u, l1}, {l2, u}}, {"test"}};
  EXPECT_TRUE(verify(good).ok);
  EXPECT_NE(verify(good).to_string().find("PASS"), std::string::npos);

  Factorization bad_y = good;
  bad_y.pairs[0].y = Matrix::identity(f, 2);
  const Report r = verify(bad_y);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(has_failure(r, "Y not U2 (index 1)"));

  // Two pairs with noncommuting values, listed in the wrong order.
  Factorization swapped = good;
  ASSERT_NE(commutator(good.pairs[0].x, good.pairs[0].y) * commutator(good.pairs[1].x, good.pairs[1].y),
            commutator(good.pairs[1].x, good.pairs[1].y) * commutator(good.pairs[0].x, good.pairs[0].y));
  std::swap(swapped.pairs[0], swapped.pairs[1]);
  const Report rs = verify(swapped);
  EXPECT_FALSE(rs.ok);
  EXPECT_TRUE(has_failure(rs, "product mismatch"));
  EXPECT_NE(rs.to_string().find("FAIL"), std::string::npos);

  Factorization wrong_size = good;
  wrong_size.pairs[0].x = Matrix::jordan_block(3, f.one());
  EXPECT_FALSE(verify(wrong_size).ok);
}

TEST(Expansion, LengthAndProduct) {
  Rng rng(37);
  const Field f = Field::galois(4);
  for (std::size_t pairs : {0u, 1u, 4u}) {
    const Factorization c = random_certificate(f, 3, pairs, rng);
    const auto u2 = expand_to_u2_product(c);
    EXPECT_EQ(u2.size(), 2 * pairs);
    Matrix prod = Matrix::identity(f, 3);
    for (const Matrix& m : u2) {
      EXPECT_TRUE(is_u2(m));
      prod = prod * m;
    }
    EXPECT_EQ(prod, c.target);
  }
}
