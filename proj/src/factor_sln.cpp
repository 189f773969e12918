#include "unicomm/factor_sln.hpp"

#include <algorithm>

#include "unicomm/factor_sl2.hpp"
#include "unicomm/sourour.hpp"

namespace unicomm {

namespace {

std::size_t half(std::size_t n) { return n / 2; }

Factorization tagged(Factorization f, const std::string& tag) {
  if (f.route.size() == 1 && f.route.front() == "identity") f.route.clear();
  f.route.insert(f.route.begin(), tag);
  return f;
}

void expect_target(const Factorization& f, const Matrix& expected, const char* what) {
  if (f.target != expected) throw Error(ErrorCode::Internal, std::string(what) + " produced the wrong target");
}

// Certificate for diag(d_1, d_1^-1) (+) ... given by 2x2 blocks, each
// factored on its own, then moved onto `target_diagonal` by a permutation.
Factorization blocks_onto(const std::vector<Factorization>& blocks, const std::vector<Element>& target_diagonal) {
  const Factorization sum = direct_sum(blocks);
  const auto order = matching_order(sum.target.diagonal_entries(), target_diagonal);
  return conjugate(sum, permutation_similarity(sum.target, order));
}

Factorization diag_block(const Element& mu) {
  const Field f = mu.field();
  if (mu.is_one()) return identity_certificate(f, 2);
  if (mu == -f.one()) return neg_identity(f);
  return diag_commutator(mu);
}

Factorization unipotent_part(const Matrix& b) {
  const Field f = b.field();
  const JordanData j = unipotent_jordan(b);
  std::vector<Factorization> blocks;
  for (std::size_t m : j.partition) {
    if (m == 1) {
      blocks.push_back(identity_certificate(f, 1));
    } else if (m == 2) {
      blocks.push_back(factor_sl2(Matrix::jordan_block(2, f.one())));
    } else {
      blocks.push_back(jn1_factor(m, f));
    }
  }
  Factorization sum = direct_sum(blocks);
  expect_target(sum, j.form, "Jordan block assembly");
  return conjugate(sum, j.transform.inverse());
}

bool enough_square_pairs(Field f, std::size_t n) {
  const std::optional<std::uint64_t> q = f.size();
  if (!q) return true;
  const std::size_t k = half(n);
  if (f.characteristic() == 2) return *q >= 2 * k + 2;
  if (minus_one_is_square(f)) return *q >= 4 * k + 5;
  return *q >= 4 * k + 3;
}

Factorization scalar_gf5_two(std::size_t n, Field f) {
  // 2 I_4 = (B (+) B) C with B = diag(2,3) and C = diag(1,-1,1,-1) similar to D E.
  const Matrix b = Matrix::diagonal(f, {f.from_int(2), f.from_int(3)});
  const Factorization bb = direct_sum(factor_sl2(b), factor_sl2(b));

  const Element m1 = -f.one();
  const Factorization j2m = factor_sl2(Matrix::jordan_block(2, m1));
  // [[-1,0,1],[0,1,0],[0,0,-1]] is [1] (+) J_2(-1) after swapping the first two coordinates.
  const Matrix swap = Matrix::from_ints(f, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  const Factorization d = pad(conjugate(pad(j2m, 1, 0), swap), 1, 0);
  const Factorization e = pad(j2m, 1, 1);
  const Factorization de = concatenate(d, e);
  const std::vector<Element> c_diag{f.one(), m1, f.one(), m1};
  const Factorization c = conjugate(de, diagonalize(de.target, c_diag));
  expect_target(c, Matrix::diagonal(f, c_diag), "GF(5) sign-pattern factor");

  Factorization four = concatenate(bb, c);
  expect_target(four, Matrix::scalar(f.from_int(2), 4), "GF(5) 2I_4 route");
  std::vector<Factorization> copies(n / 4, four);
  return tagged(direct_sum(copies), "lem4.6(lambda=2,n=" + std::to_string(n) + ")");
}

Factorization scalar_odd(const Element& lambda, std::size_t n) {
  const Field f = lambda.field();
  const std::size_t k = half(n);
  std::vector<Factorization> blocks;
  for (std::size_t i = 1; i <= k; ++i) blocks.push_back(diag_block(lambda.pow(static_cast<long long>(i))));
  blocks.push_back(identity_certificate(f, 1));
  const Factorization first = direct_sum(blocks);

  std::vector<Element> second_diag;
  for (std::size_t i = 1; i <= k; ++i) {
    second_diag.push_back(lambda.pow(static_cast<long long>(n - i + 1)));
    second_diag.push_back(lambda.pow(static_cast<long long>(i + 1)));
  }
  second_diag.push_back(lambda);
  const Factorization second = blocks_onto(blocks, second_diag);
  const Element b = lambda.pow(static_cast<long long>((n + 1) / 2));
  return tagged(concatenate(first, second),
                "prop4.8(odd,lambda=" + lambda.to_string() + ",b=" + b.to_string() + ")");
}

Factorization scalar_even_general(const Element& lambda, std::size_t n) {
  const Field f = lambda.field();
  const std::size_t k = half(n);
  auto lp = [&](std::size_t e) { return lambda.pow(static_cast<long long>(e)); };

  std::vector<Factorization> b_blocks;
  for (std::size_t i = 1; i <= k; ++i) {
    b_blocks.push_back(factor_sl2(Matrix::diagonal(f, {lp(2 * i - 1), lp(n - 2 * i + 1)})));
  }
  const Factorization b = direct_sum(b_blocks);

  std::vector<Factorization> c_blocks{identity_certificate(f, 2)};
  for (std::size_t i = 1; i < k; ++i) c_blocks.push_back(diag_block(lp(2 * i)));
  std::vector<Element> c_diag;
  for (std::size_t i = 1; i <= k; ++i) {
    c_diag.push_back(lp(n - 2 * i + 2));
    c_diag.push_back(lp(2 * i));
  }
  const Factorization c = blocks_onto(c_blocks, c_diag);
  const std::string tag = f.characteristic() == 2 ? "prop4.8(even,char=2" : "prop4.8(even";
  return tagged(concatenate(b, c), tag + ",lambda=" + lambda.to_string() + ")");
}

Factorization scalar_even_big(const Element& lambda, std::size_t n) {
  const Field f = lambda.field();
  const std::size_t k = half(n);
  std::optional<Element> a;
  for (const Element& cand : f.scan_nonzero(4 * n + 8)) {
    if (!cand.pow(static_cast<long long>(2 * n)).is_one()) {
      a = cand;
      break;
    }
  }
  if (!a) throw Error(ErrorCode::Internal, "no a with a^(2n) != 1 in a field with more than 2n+1 elements");
  const Element a2 = *a * *a;
  const Element a2inv = a2.inv();
  auto lp = [&](long long e) { return lambda.pow(e); };
  const long long ln = static_cast<long long>(n);

  // B = (+) lambda^(2i-1) D, via the blocks Lambda_{2i-1} D.
  std::vector<Factorization> b_blocks;
  std::vector<Element> b_diag;
  for (long long i = 1; i <= static_cast<long long>(k); ++i) {
    b_blocks.push_back(factor_sl2(Matrix::diagonal(f, {lp(2 * i - 1) * a2, lp(ln - 2 * i + 1) * a2inv})));
    b_diag.push_back(lp(2 * i - 1) * a2);
    b_diag.push_back(lp(2 * i - 1) * a2inv);
  }
  const Factorization b = blocks_onto(b_blocks, b_diag);

  // C = (+) lambda^(2-2i) D^-1, via Lambda_{2i-2}^-1 D^-1 whose first entries are squares.
  std::vector<Factorization> c_blocks;
  std::vector<Element> c_diag;
  for (long long i = 1; i <= static_cast<long long>(k); ++i) {
    c_blocks.push_back(diag_block(lp(2 - 2 * i) * a2inv));
    c_diag.push_back(lp(2 - 2 * i) * a2inv);
    c_diag.push_back(lp(2 - 2 * i) * a2);
  }
  const Factorization c = blocks_onto(c_blocks, c_diag);
  const std::string mode = b.size() <= 1 ? ",all-roots" : "";
  return tagged(concatenate(b, c), "prop5.3(lambda=" + lambda.to_string() + ",a=" + a->to_string() + mode + ")");
}

}  // namespace

Bound bound_for(Field field, std::size_t n) {
  const std::optional<std::uint64_t> q = field.size();
  if (n <= 1) return {0, "SL_1 is trivial"};
  if (n == 2) {
    if (q && *q <= 3) return {static_cast<std::size_t>(*q - 1), "|F| <= 3: derived subgroup only, at most |F|-1"};
    if (field.characteristic() == 2) return {2, "characteristic 2"};
    if (sum_of_two_nonzero_squares(-field.one())) return {2, "-1 is a sum of two nonzero squares"};
    return {3, "-1 is not a sum of two nonzero squares"};
  }
  if (q && *q <= 3) {
    throw Error(ErrorCode::UnsupportedFieldSize, "no construction for n > 2 over |F| <= 3");
  }
  const std::size_t k = half(n);
  if (field.characteristic() == 2 && *q >= 2 * k + 2) return {2, "characteristic 2 and |F| >= 2*floor(n/2)+2"};
  if (!q || *q >= 4 * k + 5) return {3, "|F| >= 4*floor(n/2)+5 or F infinite"};
  return {4, "|F| >= 4"};
}

Factorization i_plus_j21(Field field) {
  const Matrix x = Matrix::from_ints(field, {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}});
  const Matrix y = Matrix::from_ints(field, {{1, 0, 0}, {-1, 1, 0}, {0, 0, 1}});
  Factorization f{commutator(x, y), {{x, y}}, {"prop4.1"}};
  expect_target(f, direct_sum(Matrix::identity(field, 1), Matrix::jordan_block(2, field.one())), "I (+) J_2(1) pair");
  return f;
}

std::pair<Matrix, Matrix> jn1_generators(std::size_t n, Field field) {
  if (n <= 2) throw Error(ErrorCode::PreconditionViolated, "J_n(1) construction needs n > 2");
  const Matrix one = Matrix::identity(field, 1);
  const Matrix j2 = Matrix::jordan_block(2, field.one());
  std::vector<Matrix> xs{one};
  std::vector<Matrix> ys;
  if (n % 2 == 0) {
    for (std::size_t i = 0; i < (n - 2) / 2; ++i) xs.push_back(j2);
    xs.push_back(one);
    for (std::size_t i = 0; i < n / 2; ++i) ys.push_back(j2);
  } else {
    for (std::size_t i = 0; i < (n - 1) / 2; ++i) {
      xs.push_back(j2);
      ys.push_back(j2);
    }
    ys.push_back(one);
  }
  return {direct_sum(xs), direct_sum(ys)};
}

Factorization jn1_factor(std::size_t n, Field field) {
  const auto [x, y] = jn1_generators(n, field);
  const Matrix k = commutator(x, y);
  const JordanData kj = unipotent_jordan(k);
  const std::vector<std::size_t> expected{(n + 1) / 2, n / 2};
  if (kj.partition != expected) throw Error(ErrorCode::Internal, "[X_n, Y_n] has an unexpected Jordan type");

  // J_n(1) ~ M = (J_ceil (+) J_floor)(I_a (+) J_2(1) (+) I_b).
  const std::size_t a = n % 2 == 0 ? (n - 2) / 2 : (n - 1) / 2;
  const std::size_t b = n % 2 == 0 ? (n - 2) / 2 : (n - 3) / 2;
  const Factorization coupling = pad(i_plus_j21(field), a - 1, b);
  const Matrix m = kj.form * coupling.target;
  const JordanData mj = unipotent_jordan(m);
  if (mj.partition != std::vector<std::size_t>{n}) throw Error(ErrorCode::Internal, "coupled product is not a single block");

  const Factorization first = conjugate(Factorization{k, {{x, y}}, {}}, mj.transform * kj.transform);
  const Factorization second = conjugate(coupling, mj.transform);
  Factorization out = tagged(concatenate(first, second), "prop4.3(n=" + std::to_string(n) + ")");
  expect_target(out, Matrix::jordan_block(n, field.one()), "J_n(1) route");
  return out;
}

Factorization scalar_factor(const Element& lambda, std::size_t n) {
  const Field f = lambda.field();
  if (n == 0) throw Error(ErrorCode::SizeMismatch, "n must be at least 1");
  if (!lambda.pow(static_cast<long long>(n)).is_one()) {
    throw Error(ErrorCode::NotSLn, "lambda^n != 1 for lambda = " + lambda.to_string());
  }
  if (lambda.is_one()) return identity_certificate(f, n);
  if (n == 2) return factor_sl2(Matrix::scalar(lambda, 2));

  Factorization out = [&] {
    if (n % 2 == 1) return scalar_odd(lambda, n);
    if (f.characteristic() == 2) return scalar_even_general(lambda, n);
    const std::optional<std::uint64_t> q = f.size();
    if (q && *q == 5) {
      if (lambda == -f.one()) {
        std::vector<Factorization> blocks(n / 2, neg_identity(f));
        return tagged(direct_sum(blocks), "lem4.6(lambda=-1)");
      }
      if (lambda == f.from_int(2)) return scalar_gf5_two(n, f);
      return tagged(invert(scalar_gf5_two(n, f)), "invert");
    }
    if (!q || *q > 2 * n + 1) return scalar_even_big(lambda, n);
    return scalar_even_general(lambda, n);
  }();
  expect_target(out, Matrix::scalar(lambda, n), "scalar route");
  return out;
}

Factorization nonscalar_factor(const Matrix& a) {
  const Field f = a.field();
  const std::size_t n = a.size();
  if (a.is_scalar()) throw Error(ErrorCode::ScalarInput, "expected a nonscalar matrix");
  if (!a.determinant().is_one()) throw Error(ErrorCode::NotSLn, "determinant is not 1");
  const std::optional<std::uint64_t> q = f.size();
  if (q && *q <= 3) throw Error(ErrorCode::UnsupportedFieldSize, "no construction for |F| <= 3");

  if (enough_square_pairs(f, n)) {
    const std::size_t k = half(n);
    const SquareClassData sq = square_class_pairing(f, k);
    if (sq.pairs.size() < k) throw Error(ErrorCode::Internal, "not enough inverse pairs of squares");
    std::vector<Element> spectrum;
    std::vector<Factorization> blocks;
    if (n % 2 == 1) {
      spectrum.push_back(f.one());
      blocks.push_back(identity_certificate(f, 1));
    }
    for (std::size_t i = 0; i < k; ++i) {
      spectrum.push_back(sq.pairs[i].first);
      spectrum.push_back(sq.pairs[i].second);
      blocks.push_back(diag_commutator(sq.pairs[i].first));
    }
    const Factorization diag = direct_sum(blocks);
    const SpectrumSplit split = sourour_factor(a, spectrum, spectrum);
    const Matrix pb = diagonalize_known_spectrum(split.b, spectrum);
    const Matrix pc = diagonalize_known_spectrum(split.c, spectrum);
    Factorization out = concatenate(conjugate(diag, pb.inverse()), conjugate(diag, pc.inverse()));
    out.route.insert(out.route.begin(), split.route);
    return tagged(out, "prop5.2");
  }

  const std::vector<Element> ones(n, f.one());
  const SpectrumSplit split = sourour_factor(a, ones, ones);
  Factorization out = concatenate(unipotent_part(split.b), unipotent_part(split.c));
  out.route.insert(out.route.begin(), split.route);
  return tagged(out, "prop4.5");
}

Factorization factor(const Matrix& a) {
  const Field f = a.field();
  const std::size_t n = a.size();
  if (!a.determinant().is_one()) throw Error(ErrorCode::NotSLn, "determinant is not 1");
  const Bound bound = bound_for(f, n);

  Factorization out = [&] {
    if (a.is_identity()) return identity_certificate(f, n);
    if (n == 2) return factor_sl2(a);
    if (a.is_scalar()) return scalar_factor(a(0, 0), n);
    return nonscalar_factor(a);
  }();

  const Report report = verify(out);
  if (!report.ok || out.target != a) {
    throw Error(ErrorCode::Internal, "emitted certificate does not verify:\n" + report.to_string());
  }
  if (out.size() > bound.pairs) {
    throw Error(ErrorCode::Internal, "certificate has " + std::to_string(out.size()) + " pairs, bound is " +
                                         std::to_string(bound.pairs) + " (" + bound.reason + ")");
  }
  return out;
}

}  // namespace unicomm
