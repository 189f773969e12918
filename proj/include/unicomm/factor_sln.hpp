#pragma once

#include <string>
#include <utility>

#include "unicomm/certificate.hpp"

namespace unicomm {

/// Promised maximum pair count for SL_n(F), with the reason it applies.
struct Bound {
  std::size_t pairs;
  std::string reason;
};

/// Throws UnsupportedFieldSize for n > 2 over |F| <= 3.
Bound bound_for(Field field, std::size_t n);

/// One pair for [1] (+) J_2(1) (3x3); pad with identity blocks for larger n.
Factorization i_plus_j21(Field field);

/// The U2 matrices X_n, Y_n whose commutator has Jordan type
/// (ceil(n/2), floor(n/2)).
std::pair<Matrix, Matrix> jn1_generators(std::size_t n, Field field);

/// At most two pairs for J_n(1), n > 2.
Factorization jn1_factor(std::size_t n, Field field);

/// lambda * I_n with lambda^n = 1 (NotSLn otherwise).
Factorization scalar_factor(const Element& lambda, std::size_t n);

/// Nonscalar A in SL_n(F), n > 2, |F| >= 4.
Factorization nonscalar_factor(const Matrix& a);

/// Top-level dispatcher for any A in SL_n(F). The result is verified and its
/// length checked against bound_for before it is returned.
Factorization factor(const Matrix& a);

}  // namespace unicomm
