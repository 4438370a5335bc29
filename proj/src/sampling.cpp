#include "gstar/sampling.hpp"

namespace gstar {

namespace {

Complex normal(Rng& rng) {
  std::normal_distribution<double> d;
  const double re = d(rng);
  return {re, d(rng)};
}

}  // namespace

GrassmannElement random_element(unsigned modes, Rng& rng) {
  GrassmannElement e(modes);
  const std::uint32_t count = 1u << (2 * modes);
  for (std::uint32_t k = 0; k < count; ++k) e.add_term(Monomial{k}, normal(rng));
  return e;
}

GrassmannElement random_homogeneous(unsigned modes, Parity p, Rng& rng) {
  const auto e = random_element(modes, rng);
  return p == Parity::odd ? e.odd_part() : e.even_part();
}

GrassmannElement random_anti_hermitian_even(unsigned modes, Rng& rng) {
  const auto e = random_homogeneous(modes, Parity::even, rng);
  return (e - involution(e)) * Complex(0.5);
}

AlphaMatrix random_alpha(unsigned modes, Rng& rng) {
  Matrix a = Matrix::Zero(modes, modes);
  for (unsigned i = 0; i < modes; ++i)
    for (unsigned j = i + 1; j < modes; ++j) {
      a(i, j) = normal(rng);
      a(j, i) = -a(i, j);
    }
  return AlphaMatrix(std::move(a));
}

BosonPolynomial random_polynomial(unsigned degree, Rng& rng) {
  BosonPolynomial p;
  for (unsigned a = 0; a <= degree; ++a)
    for (unsigned b = 0; a + b <= degree; ++b) p.add_term(a, b, normal(rng));
  return p;
}

}  // namespace gstar
