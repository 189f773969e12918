#include "unicomm/random.hpp"

namespace unicomm {

Element random_element(Field field, Rng& rng) {
  if (field.is_finite()) {
    std::uniform_int_distribution<std::uint32_t> dist(0, field.order() - 1);
    return field.from_code(dist(rng));
  }
  std::uniform_int_distribution<int> dist(-9, 9);
  return field.from_int(dist(rng));
}

Element random_nonzero(Field field, Rng& rng) {
  for (;;) {
    Element e = random_element(field, rng);
    if (!e.is_zero()) return e;
  }
}

Matrix random_matrix(Field field, std::size_t n, Rng& rng) {
  Matrix m(field, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_element(field, rng);
  }
  return m;
}

Matrix random_sl(Field field, std::size_t n, Rng& rng) {
  for (;;) {
    Matrix m = random_matrix(field, n, rng);
    const Element d = m.determinant();
    if (d.is_zero()) continue;
    const Element s = d.inv();
    for (std::size_t j = 0; j < n; ++j) m(0, j) = m(0, j) * s;
    return m;
  }
}

Matrix random_integral_sl(std::size_t n, Rng& rng, std::size_t steps) {
  const Field q = Field::rationals();
  Matrix m = Matrix::identity(q, n);
  std::uniform_int_distribution<std::size_t> index(0, n - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (std::size_t s = 0; s < steps; ++s) {
    const std::size_t i = index(rng);
    std::size_t j = index(rng);
    if (i == j) j = (j + 1) % n;
    Matrix e = Matrix::identity(q, n);
    e(i, j) = q.from_int(coeff(rng));
    m = m * e;
  }
  return m;
}

Matrix random_nonscalar_sl(Field field, std::size_t n, Rng& rng) {
  for (;;) {
    Matrix m = field.is_finite() ? random_sl(field, n, rng) : random_integral_sl(n, rng);
    if (!m.is_scalar()) return m;
  }
}

}  // namespace unicomm
