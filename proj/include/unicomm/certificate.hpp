#pragma once

#include <string>
#include <vector>

#include "unicomm/matrix.hpp"

namespace unicomm {

/// (A - I)^k = 0 and (A - I)^{k-1} != 0.
bool is_unipotent_index(const Matrix& a, unsigned k);
inline bool is_u2(const Matrix& a) { return is_unipotent_index(a, 2); }

/// X Y X^-1 Y^-1.
Matrix commutator(const Matrix& x, const Matrix& y);

enum class U2Tag { type_i_upper, type_i_lower, type_ii };

/// A 2x2 U2 matrix written as [[1+a, b], [c, 1-a]] with a^2 + bc = 0.
struct U2Type {
  U2Tag tag;
  Element a, b, c;
};

/// Throws NotU2.
U2Type classify_u2_sl2(const Matrix& a);
std::string_view to_string(U2Tag tag);

struct CommutatorPair {
  Matrix x;
  Matrix y;
  [[nodiscard]] Matrix value() const { return commutator(x, y); }
};

/// Ordered product of commutators [X_i, Y_i] claimed to equal `target`, with
/// the trail of constructions that produced it.
struct Factorization {
  Matrix target;
  std::vector<CommutatorPair> pairs;
  std::vector<std::string> route;

  [[nodiscard]] std::size_t size() const { return pairs.size(); }
  [[nodiscard]] Field field() const { return target.field(); }
  [[nodiscard]] std::size_t dimension() const { return target.size(); }
};

/// Empty certificate for the identity.
Factorization identity_certificate(Field field, std::size_t n);

// Transports. Each returns a certificate for the transformed target.

/// Certificate for target^-1: pairs reversed, each (X, Y) -> (Y, X).
Factorization invert(const Factorization& f);
/// Certificate for P target P^-1.
Factorization conjugate(const Factorization& f, const Matrix& p);
/// Certificate for f.target (+) g.target with max(r, s) pairs.
Factorization direct_sum(const Factorization& f, const Factorization& g);
Factorization direct_sum(const std::vector<Factorization>& parts);
/// I_before (+) target (+) I_after.
Factorization pad(const Factorization& f, std::size_t before, std::size_t after);
/// Certificate for f.target * g.target by concatenating pair lists.
Factorization concatenate(const Factorization& f, const Factorization& g);

struct CheckEntry {
  std::string name;
  bool ok;
  std::string detail;
};

struct Report {
  bool ok = true;
  std::vector<CheckEntry> entries;
  [[nodiscard]] std::string to_string() const;
};

/// Independent recomputation of every claim in the certificate.
Report verify(const Factorization& f);

/// Each [X, Y] becomes X * (Y X^-1 Y^-1); the second factor is a conjugate of
/// X^-1 and therefore U2 as well.
std::vector<Matrix> expand_to_u2_product(const Factorization& f);

}  // namespace unicomm
