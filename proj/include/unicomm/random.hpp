#pragma once

#include <random>

#include "unicomm/matrix.hpp"

namespace unicomm {

using Rng = std::mt19937_64;

/// Uniform over a finite field; over Q a small integer in [-9, 9].
Element random_element(Field field, Rng& rng);
Element random_nonzero(Field field, Rng& rng);
Matrix random_matrix(Field field, std::size_t n, Rng& rng);
/// Uniform over SL_n(F_q) for finite fields: a random invertible matrix with
/// its first row rescaled by det^-1.
Matrix random_sl(Field field, std::size_t n, Rng& rng);
/// Integral element of SL_n(Q) as a product of `steps` elementary matrices.
Matrix random_integral_sl(std::size_t n, Rng& rng, std::size_t steps = 12);
/// Nonscalar element of SL_n (resampled until nonscalar; n >= 2).
Matrix random_nonscalar_sl(Field field, std::size_t n, Rng& rng);

}  // namespace unicomm
