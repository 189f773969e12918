#include "unicomm/selftest.hpp"

#include <functional>

#include "unicomm/factor_sl2.hpp"
#include "unicomm/factor_sln.hpp"
#include "unicomm/io.hpp"
#include "unicomm/oracle.hpp"
#include "unicomm/random.hpp"

namespace unicomm {

namespace {

struct Check {
  std::string name;
  std::function<bool()> run;
};

std::vector<Check> checks(std::uint64_t seed) {
  const Field f2 = Field::prime(2);
  const Field f3 = Field::prime(3);
  const Field f5 = Field::prime(5);
  const Field f7 = Field::prime(7);
  return {
      {"GF(4): g*g = g+1",
       [] {
         const Field f4 = Field::galois(4);
         const Element g = f4.from_coefficients({0, 1});
         return g * g == f4.from_coefficients({1, 1});
       }},
      {"GF(3): -1 = 1^2 + 1^2",
       [f3] {
         const auto ab = sum_of_two_nonzero_squares(-f3.one());
         return ab && ab->first.is_one() && ab->second.is_one();
       }},
      {"square class pairs: GF(7) k=1, GF(8) k=3, GF(9) k=1",
       [] {
         return square_class_pairing(Field::galois(7)).pairs.size() == 1 &&
                square_class_pairing(Field::galois(8)).pairs.size() == 3 &&
                square_class_pairing(Field::galois(9)).pairs.size() == 1;
       }},
      {"GF(7): [[[1,1],[0,1]], [[5,5],[1,4]]] = [[0,6],[1,3]]",
       [f7] {
         return commutator(Matrix::from_ints(f7, {{1, 1}, {0, 1}}), Matrix::from_ints(f7, {{5, 5}, {1, 4}})) ==
                Matrix::from_ints(f7, {{0, 6}, {1, 3}});
       }},
      {"GF(7): [[0,6],[1,3]] is one pair with alpha=1",
       [f7] {
         const Factorization c = factor(Matrix::from_ints(f7, {{0, 6}, {1, 3}}));
         return c.size() == 1 && c.route == std::vector<std::string>{"thm3.2(alpha=1)"};
       }},
      {"[1] (+) J_2(1) is a single commutator",
       [f5] { return verify(i_plus_j21(f5)).ok; }},
      {"[X_4, Y_4] has Jordan type (2,2), [X_5, Y_5] has (3,2)",
       [f5] {
         const auto [x4, y4] = jn1_generators(4, f5);
         const auto [x5, y5] = jn1_generators(5, f5);
         return unipotent_jordan(commutator(x4, y4)).partition == std::vector<std::size_t>{2, 2} &&
                unipotent_jordan(commutator(x5, y5)).partition == std::vector<std::size_t>{3, 2};
       }},
      {"GF(3): -I_2 in two pairs",
       [f3] {
         const Factorization c = neg_identity(f3);
         return c.size() == 2 && verify(c).ok;
       }},
      {"GF(5): -I_2 in three pairs",
       [f5] {
         const Factorization c = factor(-Matrix::identity(f5, 2));
         return c.size() == 3 && verify(c).ok;
       }},
      {"GF(2): J_2(1) is outside the derived subgroup",
       [f2] {
         try {
           (void)factor_sl2(Matrix::jordan_block(2, f2.one()));
         } catch (const Error& e) {
           return e.code() == ErrorCode::OutsideDerivedSubgroup;
         }
         return false;
       }},
      {"|SL_2(F_2)'| = 3, |SL_2(F_3)'| = 8, |SL_2(F_3)| = 24",
       [f2, f3] {
         const GroupTable t2 = GroupTable::build(f2, 2);
         const GroupTable t3 = GroupTable::build(f3, 2);
         return derived_subgroup(t2).size() == 3 && derived_subgroup(t3).size() == 8 && t3.order() == 24;
       }},
      {"BFS length of -I_2: 2 over GF(3), 3 over GF(5)",
       [f3, f5] {
         const GroupTable t3 = GroupTable::build(f3, 2);
         const GroupTable t5 = GroupTable::build(f5, 2);
         const auto l3 = bfs_lengths(t3);
         const auto l5 = bfs_lengths(t5);
         return l3.length[*t3.find(-Matrix::identity(f3, 2))] == 2 && l5.length[*t5.find(-Matrix::identity(f5, 2))] == 3;
       }},
      {"GF(5): 2 I_4 in at most four pairs",
       [f5] {
         const Factorization c = scalar_factor(f5.from_int(2), 4);
         return c.size() <= 4 && verify(c).ok;
       }},
      {"seeded SL_3(GF(4)) factor, verify and JSON round trip",
       [seed] {
         Rng rng(seed);
         const Matrix a = random_sl(Field::galois(4), 3, rng);
         const Factorization c = factor(a);
         const Factorization back = parse_certificate(dump_certificate(c));
         return c.size() <= 2 && verify(back).ok && dump_certificate(back) == dump_certificate(c);
       }},
  };
}

}  // namespace

std::vector<SelftestResult> run_selftest(std::uint64_t seed) {
  std::vector<SelftestResult> out;
  for (const auto& check : checks(seed)) {
    try {
      out.push_back({check.name, check.run(), {}});
    } catch (const std::exception& e) {
      out.push_back({check.name, false, e.what()});
    }
  }
  return out;
}

}  // namespace unicomm
