#pragma once

#include <string>
#include <vector>

#include "unicomm/matrix.hpp"

namespace unicomm {

struct SpectrumSplit {
  Matrix b;  // A = b * c
  Matrix c;
  // Internal witnesses: A = basis * b_lower * c_upper * basis^-1 with b_lower
  // lower triangular and c_upper upper triangular, diagonals betas / gammas
  // (possibly reordered by backtracking).
  Matrix basis;
  Matrix b_lower;
  Matrix c_upper;
  std::size_t backtracks = 0;
  std::string route;
};

/// Writes a nonscalar invertible A as B*C with charpoly(B) = prod (x - beta_i)
/// and charpoly(C) = prod (x - gamma_i). Needs prod(betas) * prod(gammas) = det A.
/// Throws ScalarInput, DeterminantMismatch, SizeMismatch, ConstructionFailed.
SpectrumSplit sourour_factor(const Matrix& a, const std::vector<Element>& betas,
                             const std::vector<Element>& gammas);

}  // namespace unicomm
