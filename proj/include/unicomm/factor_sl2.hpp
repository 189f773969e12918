#pragma once

#include <optional>

#include "unicomm/certificate.hpp"

namespace unicomm {

/// Nonzero alpha with alpha^2 = tr(A) - 2 when A is a single U2 commutator,
/// nullopt otherwise. A must be a nonscalar element of SL_2 (ScalarInput).
std::optional<Element> single_commutator_test(const Matrix& a);

/// One pair for a nonscalar A in SL_2 with tr(A) = 2 + alpha^2, alpha != 0.
/// Built on the companion form [[0,-1],[1,2+alpha^2]] and conjugated back.
Factorization trace_construction(const Matrix& a, const Element& alpha);

/// One pair for diag(a, a^-1) when a is a square other than 0, 1, -1.
/// Throws NotASquare or DegenerateValue.
Factorization diag_commutator(const Element& a);

/// Certificate for -I_2: empty in characteristic 2, otherwise two pairs when
/// -1 is a square (|F| > 5) or a sum of two nonzero squares, three otherwise.
Factorization neg_identity(Field field);

/// Any A in SL_2(F). At most three pairs for |F| >= 4, at most two in
/// characteristic 2 or when -1 is a sum of two nonzero squares. For |F| <= 3
/// only elements of the derived subgroup are accepted (OutsideDerivedSubgroup).
Factorization factor_sl2(const Matrix& a);

}  // namespace unicomm
