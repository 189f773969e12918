#include "unicomm/sourour.hpp"

#include <optional>

namespace unicomm {

namespace {

// A = s * b * c * s^-1, b lower and c upper triangular.
struct Witness {
  Matrix s;
  Matrix b;
  Matrix c;
};

// Hard cap on explored branches; generous compared with what the search
// actually needs, it only guards against a runaway in a pathological input.
constexpr std::size_t kMaxAttempts = 20000;

struct Search {
  std::size_t attempts = 0;
  std::size_t backtracks = 0;
};

bool is_eigenvector(const Matrix& a, const Vector& x) {
  const Vector ax = a.apply(x);
  SpanTracker span(a.field(), a.size());
  span.add(x);
  return span.contains(ax);
}

// Candidate first basis vectors in a fixed order: e_i, e_i + e_j, e_i + c e_j.
std::vector<Vector> candidate_vectors(const Matrix& a) {
  const std::size_t n = a.size();
  const Field f = a.field();
  auto unit = [&](std::size_t i) {
    Vector v(n, f.zero());
    v[i] = f.one();
    return v;
  };
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(unit(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v = unit(i);
      v[j] = f.one();
      out.push_back(v);
    }
  }
  for (const Element& c : f.scan_nonzero(8)) {
    if (c.is_one()) continue;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        Vector v = unit(i);
        v[j] = c;
        out.push_back(v);
      }
    }
  }
  std::vector<Vector> usable;
  for (auto& v : out) {
    if (!is_eigenvector(a, v)) usable.push_back(std::move(v));
  }
  return usable;
}

std::vector<Element> without(const std::vector<Element>& v, std::size_t index) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != index) out.push_back(v[i]);
  }
  return out;
}

std::optional<Witness> solve(const Matrix& a, const std::vector<Element>& betas,
                             const std::vector<Element>& gammas, Search& search) {
  const std::size_t m = a.size();
  const Field f = a.field();
  if (++search.attempts > kMaxAttempts) return std::nullopt;

  if (m == 1) {
    if (betas[0] * gammas[0] != a(0, 0)) return std::nullopt;
    return Witness{Matrix::identity(f, 1), Matrix::diagonal(f, betas), Matrix::diagonal(f, gammas)};
  }
  if (a.is_scalar()) {
    // Only the diagonal solution is available for a scalar block.
    for (std::size_t i = 0; i < m; ++i) {
      if (betas[i] * gammas[i] != a(0, 0)) return std::nullopt;
    }
    return Witness{Matrix::identity(f, m), Matrix::diagonal(f, betas), Matrix::diagonal(f, gammas)};
  }

  // Head pairings: the given order first, then every other (beta_i, gamma_j)
  // with a product not tried yet.
  std::vector<std::pair<std::size_t, std::size_t>> heads{{0, 0}};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      bool seen = false;
      for (const auto& [hi, hj] : heads) {
        if (betas[hi] == betas[i] && gammas[hj] == gammas[j]) seen = true;
      }
      if (!seen) heads.emplace_back(i, j);
    }
  }

  const std::vector<Vector> xs = candidate_vectors(a);
  for (const auto& [hi, hj] : heads) {
    const Element& beta = betas[hi];
    const Element& gamma = gammas[hj];
    const Element t = beta * gamma;
    const std::vector<Element> rest_b = without(betas, hi);
    const std::vector<Element> rest_c = without(gammas, hj);
    const Matrix shifted = a - Matrix::scalar(t, m);

    for (const Vector& x : xs) {
      const Vector y = shifted.apply(x);
      SpanTracker span(f, m);
      span.add(x);
      span.add(y);
      std::vector<Vector> columns{x, y};
      for (std::size_t i = 0; i < m && columns.size() < m; ++i) {
        Vector e(m, f.zero());
        e[i] = f.one();
        if (span.add(e)) columns.push_back(e);
      }
      // Variant 0 is the canonical completion; variant j adds x to the j-th
      // completion vector, which changes the Schur complement by a rank-one
      // term and breaks scalar degeneracies.
      for (std::size_t variant = 0; variant + 2 <= m; ++variant) {
        std::vector<Vector> cols = columns;
        if (variant > 0) {
          for (std::size_t r = 0; r < m; ++r) cols[variant + 1][r] += x[r];
        }
        const Matrix s = Matrix::from_columns(f, cols);
        const Matrix ap = s.inverse() * a * s;

        Matrix reduced(f, m - 1);
        const Element tinv = t.inv();
        for (std::size_t i = 0; i < m - 1; ++i) {
          for (std::size_t j = 0; j < m - 1; ++j) {
            reduced(i, j) = ap(i + 1, j + 1) - ap(i + 1, 0) * ap(0, j + 1) * tinv;
          }
        }
        auto sub = solve(reduced, rest_b, rest_c, search);
        if (!sub) {
          ++search.backtracks;
          if (search.attempts > kMaxAttempts) return std::nullopt;
          continue;
        }

        // Assemble the triangular witnesses in the basis s * diag(1, sub.s).
        const Matrix sub_inv = sub->s.inverse();
        Matrix b(f, m);
        Matrix c(f, m);
        b(0, 0) = beta;
        c(0, 0) = gamma;
        const Element ginv = gamma.inv();
        const Element binv = beta.inv();
        for (std::size_t i = 0; i < m - 1; ++i) {
          Element vi = f.zero();
          Element ui = f.zero();
          for (std::size_t k = 0; k < m - 1; ++k) {
            vi += sub_inv(i, k) * ap(k + 1, 0);
            ui += ap(0, k + 1) * sub->s(k, i);
          }
          b(i + 1, 0) = vi * ginv;
          c(0, i + 1) = ui * binv;
          for (std::size_t j = 0; j < m - 1; ++j) {
            b(i + 1, j + 1) = sub->b(i, j);
            c(i + 1, j + 1) = sub->c(i, j);
          }
        }
        return Witness{s * direct_sum(Matrix::identity(f, 1), sub->s), b, c};
      }
    }
  }
  return std::nullopt;
}

std::string join(const std::vector<Element>& values) {
  std::string s = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ",";
    s += values[i].to_string();
  }
  return s + ")";
}

bool is_lower_triangular(const Matrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!m(i, j).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

SpectrumSplit sourour_factor(const Matrix& a, const std::vector<Element>& betas,
                             const std::vector<Element>& gammas) {
  const std::size_t n = a.size();
  const Field f = a.field();
  if (betas.size() != n || gammas.size() != n) {
    throw Error(ErrorCode::SizeMismatch, "prescribed spectra must have n entries each");
  }
  if (a.is_scalar()) throw Error(ErrorCode::ScalarInput, "prescribed-spectrum split needs a nonscalar matrix");
  Element product = f.one();
  for (const auto& e : betas) product *= e;
  for (const auto& e : gammas) product *= e;
  for (const auto* list : {&betas, &gammas}) {
    for (const auto& e : *list) {
      if (e.field() != f) throw Error(ErrorCode::FieldMismatch, "prescribed eigenvalue from another field");
      if (e.is_zero()) throw Error(ErrorCode::DeterminantMismatch, "prescribed eigenvalues must be nonzero");
    }
  }
  if (product != a.determinant()) {
    throw Error(ErrorCode::DeterminantMismatch, "prod(betas) * prod(gammas) != det A");
  }

  Search search;
  auto w = solve(a, betas, gammas, search);
  if (!w) {
    throw Error(ErrorCode::ConstructionFailed,
                "no triangular split found after " + std::to_string(search.attempts) + " attempts");
  }
  const Matrix sinv = w->s.inverse();
  SpectrumSplit out{w->s * w->b * sinv, w->s * w->c * sinv, w->s, w->b, w->c, search.backtracks, {}};

  if (!is_lower_triangular(out.b_lower) || !is_lower_triangular(out.c_upper.transpose())) {
    throw Error(ErrorCode::Internal, "split witnesses are not triangular");
  }
  if (out.b * out.c != a) throw Error(ErrorCode::Internal, "split does not recompose");
  if (charpoly(out.b) != poly_from_roots(f, betas) || charpoly(out.c) != poly_from_roots(f, gammas)) {
    throw Error(ErrorCode::Internal, "split spectra do not match the prescription");
  }
  out.route = "sourour(betas=" + join(betas) + ",gammas=" + join(gammas) +
              ",backtracks=" + std::to_string(out.backtracks) + ")";
  return out;
}

}  // namespace unicomm
