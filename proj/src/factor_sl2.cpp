#include "unicomm/factor_sl2.hpp"

#include "unicomm/oracle.hpp"
#include "unicomm/sourour.hpp"

namespace unicomm {

namespace {

void require_sl2(const Matrix& a) {
  if (a.size() != 2) throw Error(ErrorCode::NotSL2, "expected a 2x2 matrix");
  if (!a.determinant().is_one()) throw Error(ErrorCode::NotSL2, "determinant is not 1");
}

Factorization with_route(Factorization f, const std::string& tag) {
  if (f.route.size() == 1 && f.route.front() == "identity") f.route.clear();
  f.route.insert(f.route.begin(), tag);
  return f;
}

Factorization single_pair(const Matrix& a) {
  const auto alpha = single_commutator_test(a);
  if (!alpha) throw Error(ErrorCode::Internal, "expected a single commutator: " + a.to_string());
  return trace_construction(a, *alpha);
}

// J_2(1) over GF(5) is D^2 with D = [[-1,2],[0,-1]], and D is a single
// commutator (tr D - 2 = 1). A unipotent nonscalar A is P^-1 J_2(1) P.
Factorization unipotent_gf5(const Matrix& a) {
  const Field f = a.field();
  const JordanData j = unipotent_jordan(a);
  const Matrix d = Matrix::from_ints(f, {{-1, 2}, {0, -1}});
  const Factorization fd = single_pair(d);
  return conjugate(concatenate(fd, fd), j.transform.inverse());
}

Factorization split_gf5(const Matrix& a) {
  const Field f = a.field();
  const Element m1 = -f.one();
  const SpectrumSplit split = sourour_factor(a, {m1, m1}, {m1, m1});
  // If one factor is -I then A = -(other factor) is unipotent.
  Factorization out = !split.b.is_scalar() && !split.c.is_scalar()
                          ? concatenate(single_pair(split.b), single_pair(split.c))
                          : unipotent_gf5(a);
  out.route.insert(out.route.begin(), split.route);
  return with_route(out, "prop3.11(q=5)");
}

Factorization split_generic(const Matrix& a) {
  const Field f = a.field();
  const Element b = square_ne_inverse_witness(f);
  const Element b2 = b * b;
  const std::vector<Element> spectrum{b2, b2.inv()};
  const SpectrumSplit split = sourour_factor(a, spectrum, spectrum);
  const Factorization diag = diag_commutator(b2);
  const Matrix pb = diagonalize_known_spectrum(split.b, spectrum);
  const Matrix pc = diagonalize_known_spectrum(split.c, spectrum);
  Factorization out = concatenate(conjugate(diag, pb.inverse()), conjugate(diag, pc.inverse()));
  out.route.insert(out.route.begin(), split.route);
  return with_route(out, "prop3.11(b=" + b.to_string() + ")");
}

}  // namespace

std::optional<Element> single_commutator_test(const Matrix& a) {
  require_sl2(a);
  if (a.is_scalar()) throw Error(ErrorCode::ScalarInput, "single commutator test needs a nonscalar matrix");
  const Element shifted = a.trace() - a.field().from_int(2);
  if (shifted.is_zero()) return std::nullopt;
  return sqrt(shifted);
}

Factorization trace_construction(const Matrix& a, const Element& alpha) {
  require_sl2(a);
  const Field f = a.field();
  if (a.is_scalar() || alpha.is_zero() || a.trace() != f.from_int(2) + alpha * alpha) {
    throw Error(ErrorCode::PreconditionViolated, "trace construction needs nonscalar A with tr A = 2 + alpha^2");
  }
  const Element a2 = alpha * alpha;
  const Element ainv = alpha.inv();
  const Element s = a2 + alpha + f.one();
  const Matrix x = Matrix::from_rows(f, {{f.one(), a2}, {f.zero(), f.one()}});
  const Matrix y = Matrix::from_rows(f, {{f.one() - ainv * s, -(ainv * s * s)}, {ainv, f.one() + ainv * s}});
  const Matrix companion = Matrix::from_rows(f, {{f.zero(), -f.one()}, {f.one(), f.from_int(2) + a2}});
  Factorization base{companion, {{x, y}}, {"thm3.2(alpha=" + alpha.to_string() + ")"}};
  const Matrix p = companion_similarity_2x2(a);
  return conjugate(base, p.inverse());
}

Factorization diag_commutator(const Element& a) {
  const Field f = a.field();
  if (a.is_zero() || a.is_one() || a == -f.one()) {
    throw Error(ErrorCode::DegenerateValue, "diag(a, a^-1) needs a outside {-1, 0, 1}");
  }
  const auto b = sqrt(a);
  if (!b) throw Error(ErrorCode::NotASquare, a.to_string() + " is not a square");
  const Element alpha = *b - b->inv();
  return with_route(trace_construction(Matrix::diagonal(f, {a, a.inv()}), alpha),
                    "cor3.6(a=" + a.to_string() + ",b=" + b->to_string() + ")");
}

Factorization neg_identity(Field field) {
  if (field.characteristic() == 2) return identity_certificate(field, 2);
  const Matrix target = -Matrix::identity(field, 2);
  const std::optional<std::uint64_t> q = field.size();
  const bool tiny = q && (*q == 3 || *q == 5);

  if (!tiny) {
    if (const auto a = sqrt(-field.one())) {
      // -I = diag(b^2, b^-2) diag((a/b)^2, (a/b)^-2).
      const Element b = square_ne_inverse_witness(field);
      const Element c = *a * b.inv();
      Factorization out = concatenate(diag_commutator(b * b), diag_commutator(c * c));
      return with_route(out, "prop3.10(a=" + a->to_string() + ",b=" + b.to_string() + ")");
    }
  }
  if (const auto ab = sum_of_two_nonzero_squares(-field.one())) {
    // M1 M2 = -I with tr M1 = 2 + alpha^2 and tr M2 = 2 + beta^2, alpha = 2a, beta = 2b.
    const Element two = field.from_int(2);
    const Element alpha = two * ab->first;
    const Element beta = two * ab->second;
    const Element a2 = alpha * alpha;
    const Element off = two * a2 - field.one();
    const Matrix m1 = Matrix::from_rows(field, {{two, field.one()}, {off, a2}});
    const Matrix m2 = Matrix::from_rows(field, {{-a2, field.one()}, {off, -two}});
    Factorization out = concatenate(trace_construction(m1, alpha), trace_construction(m2, beta));
    return with_route(out, "cor3.4(a=" + ab->first.to_string() + ",b=" + ab->second.to_string() + ")");
  }
  if (q && *q == 5) {
    // -I = J_2(-1) J_2(1).
    const Matrix jm = Matrix::jordan_block(2, -field.one());
    const Matrix jp = Matrix::jordan_block(2, field.one());
    Factorization out = concatenate(single_pair(jm), unipotent_gf5(jp));
    return with_route(out, "prop3.12(q=5)");
  }
  // -I = D (-D^-1) with D = diag(b^2, b^-2); D is one pair, -D^-1 is nonscalar.
  const Element b = square_ne_inverse_witness(field);
  const Element b2 = b * b;
  const Matrix rest = Matrix::diagonal(field, {-b2.inv(), -b2});
  Factorization out = concatenate(diag_commutator(b2), factor_sl2(rest));
  if (out.target != target) throw Error(ErrorCode::Internal, "-I route produced the wrong target");
  return with_route(out, "prop3.12(b=" + b.to_string() + ")");
}

Factorization factor_sl2(const Matrix& a) {
  require_sl2(a);
  const Field f = a.field();
  const std::optional<std::uint64_t> q = f.size();
  if (a.is_identity()) return identity_certificate(f, 2);

  if (q && *q <= 3) {
    if (!in_small_derived_subgroup(a)) {
      throw Error(ErrorCode::OutsideDerivedSubgroup,
                  a.to_string() + " is not in the derived subgroup of SL_2(" + f.to_string() + ")");
    }
    const Factorization out = a.is_scalar() ? neg_identity(f) : single_pair(a);
    return with_route(out, "thm3.8(q=" + std::to_string(*q) + ")");
  }

  if (a.is_scalar()) return neg_identity(f);  // det 1 forces -I

  if (a.is_diagonal()) {
    const Element d = a(0, 0);
    if (d != -f.one() && is_square(d)) return diag_commutator(d);
  }
  if (const auto alpha = single_commutator_test(a)) return trace_construction(a, *alpha);
  if (q && *q == 5) return split_gf5(a);
  return split_generic(a);
}

}  // namespace unicomm
