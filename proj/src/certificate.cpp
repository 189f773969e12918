#include "unicomm/certificate.hpp"

#include <algorithm>

namespace unicomm {

bool is_unipotent_index(const Matrix& a, unsigned k) {
  if (k == 0) return false;
  const Matrix nil = a - Matrix::identity(a.field(), a.size());
  Matrix power = Matrix::identity(a.field(), a.size());
  for (unsigned i = 1; i < k; ++i) power = power * nil;
  if (power.is_zero()) return false;
  return (power * nil).is_zero();
}

Matrix commutator(const Matrix& x, const Matrix& y) { return x * y * x.inverse() * y.inverse(); }

std::string_view to_string(U2Tag tag) {
  switch (tag) {
    case U2Tag::type_i_upper: return "type_i_upper";
    case U2Tag::type_i_lower: return "type_i_lower";
    case U2Tag::type_ii: return "type_ii";
  }
  return "?";
}

U2Type classify_u2_sl2(const Matrix& m) {
  if (m.size() != 2) throw Error(ErrorCode::NotU2, "classification is for 2x2 matrices");
  if (!is_u2(m)) throw Error(ErrorCode::NotU2, "matrix is not unipotent of index 2");
  const Field f = m.field();
  Element a = m(0, 0) - f.one();
  Element b = m(0, 1);
  Element c = m(1, 0);
  if (m(1, 1) != f.one() - a || a * a + b * c != f.zero()) {
    throw Error(ErrorCode::NotU2, "matrix does not have the [[1+a,b],[c,1-a]] shape");
  }
  U2Tag tag = U2Tag::type_ii;
  if (a.is_zero()) tag = c.is_zero() ? U2Tag::type_i_upper : U2Tag::type_i_lower;
  return U2Type{tag, a, b, c};
}

Factorization identity_certificate(Field field, std::size_t n) {
  return Factorization{Matrix::identity(field, n), {}, {"identity"}};
}

Factorization invert(const Factorization& f) {
  Factorization out{f.target.inverse(), {}, f.route};
  for (auto it = f.pairs.rbegin(); it != f.pairs.rend(); ++it) out.pairs.push_back({it->y, it->x});
  return out;
}

Factorization conjugate(const Factorization& f, const Matrix& p) {
  const Matrix pinv = p.inverse();
  Factorization out{p * f.target * pinv, {}, f.route};
  for (const auto& pair : f.pairs) out.pairs.push_back({p * pair.x * pinv, p * pair.y * pinv});
  return out;
}

Factorization direct_sum(const Factorization& f, const Factorization& g) {
  if (f.field() != g.field()) throw Error(ErrorCode::FieldMismatch, "direct sum of certificates over different fields");
  const Matrix id_f = Matrix::identity(f.field(), f.dimension());
  const Matrix id_g = Matrix::identity(g.field(), g.dimension());
  Factorization out{unicomm::direct_sum(f.target, g.target), {}, f.route};
  out.route.insert(out.route.end(), g.route.begin(), g.route.end());
  out.route.erase(std::remove(out.route.begin(), out.route.end(), "identity"), out.route.end());
  if (out.route.empty()) out.route.push_back("identity");
  const std::size_t count = std::max(f.size(), g.size());
  for (std::size_t i = 0; i < count; ++i) {
    const Matrix& x1 = i < f.size() ? f.pairs[i].x : id_f;
    const Matrix& y1 = i < f.size() ? f.pairs[i].y : id_f;
    const Matrix& x2 = i < g.size() ? g.pairs[i].x : id_g;
    const Matrix& y2 = i < g.size() ? g.pairs[i].y : id_g;
    CommutatorPair pair{unicomm::direct_sum(x1, x2), unicomm::direct_sum(y1, y2)};
    if (pair.x.is_identity() && pair.y.is_identity()) continue;
    // Block sums of U2-or-identity matrices are U2 unless both blocks are I.
    if (pair.x.is_identity() || pair.y.is_identity()) {
      throw Error(ErrorCode::Internal, "direct sum produced a pair with an identity member");
    }
    out.pairs.push_back(std::move(pair));
  }
  return out;
}

Factorization direct_sum(const std::vector<Factorization>& parts) {
  if (parts.empty()) throw Error(ErrorCode::SizeMismatch, "direct sum of no certificates");
  Factorization out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = direct_sum(out, parts[i]);
  return out;
}

Factorization pad(const Factorization& f, std::size_t before, std::size_t after) {
  Factorization out = f;
  if (before > 0) out = direct_sum(identity_certificate(f.field(), before), out);
  if (after > 0) out = direct_sum(out, identity_certificate(f.field(), after));
  return out;
}

Factorization concatenate(const Factorization& f, const Factorization& g) {
  Factorization out{f.target * g.target, f.pairs, f.route};
  out.pairs.insert(out.pairs.end(), g.pairs.begin(), g.pairs.end());
  out.route.insert(out.route.end(), g.route.begin(), g.route.end());
  out.route.erase(std::remove(out.route.begin(), out.route.end(), "identity"), out.route.end());
  if (out.route.empty()) out.route.push_back("identity");
  return out;
}

std::string Report::to_string() const {
  std::string s;
  for (const auto& e : entries) {
    s += e.ok ? "ok   " : "FAIL ";
    s += e.name;
    if (!e.detail.empty()) s += ": " + e.detail;
    s += "\n";
  }
  s += ok ? "PASS\n" : "FAIL\n";
  return s;
}

namespace {

std::string u2_failure(const Matrix& m) {
  if (m.is_identity()) return "not U2 (index 1)";
  return "not U2 ((M - I)^2 != 0)";
}

}  // namespace

Report verify(const Factorization& f) {
  Report report;
  auto record = [&report](std::string name, bool ok, std::string detail = {}) {
    report.entries.push_back({std::move(name), ok, std::move(detail)});
    report.ok = report.ok && ok;
  };

  const Field field = f.field();
  const std::size_t n = f.dimension();
  Matrix product = Matrix::identity(field, n);
  for (std::size_t i = 0; i < f.pairs.size(); ++i) {
    const auto& pair = f.pairs[i];
    const std::string label = "pair " + std::to_string(i);
    if (pair.x.field() != field || pair.y.field() != field || pair.x.size() != n || pair.y.size() != n) {
      record(label + " shape", false, "field or dimension differs from the target");
      return report;
    }
    const bool x_ok = is_u2(pair.x);
    const bool y_ok = is_u2(pair.y);
    record(label + " X", x_ok, x_ok ? "" : "X " + u2_failure(pair.x));
    record(label + " Y", y_ok, y_ok ? "" : "Y " + u2_failure(pair.y));
    if (pair.x.determinant().is_zero() || pair.y.determinant().is_zero()) {
      record(label + " invertible", false, "singular member");
      return report;
    }
    const Matrix value = pair.value();
    const bool det_ok = value.determinant().is_one();
    record(label + " det", det_ok, det_ok ? "" : "commutator value has determinant " + value.determinant().to_string());
    product = product * value;
  }
  const bool product_ok = product == f.target;
  record("product", product_ok, product_ok ? "" : "product mismatch");
  return report;
}

std::vector<Matrix> expand_to_u2_product(const Factorization& f) {
  std::vector<Matrix> out;
  out.reserve(2 * f.pairs.size());
  for (const auto& pair : f.pairs) {
    out.push_back(pair.x);
    out.push_back(pair.y * pair.x.inverse() * pair.y.inverse());
  }
  return out;
}

}  // namespace unicomm
