// Seeded random inputs for property checks.
#pragma once

#include <random>

#include "gstar/boson.hpp"
#include "gstar/covariance.hpp"

namespace gstar {

using Rng = std::mt19937_64;

/// Every monomial gets an independent standard complex normal coefficient.
GrassmannElement random_element(unsigned modes, Rng& rng);
/// Same, restricted to monomials of the given parity.
GrassmannElement random_homogeneous(unsigned modes, Parity p, Rng& rng);
/// Even element with involution(λ) = −λ.
GrassmannElement random_anti_hermitian_even(unsigned modes, Rng& rng);
AlphaMatrix random_alpha(unsigned modes, Rng& rng);
/// Random coefficients on every z^a z̄^b with a + b ≤ degree.
BosonPolynomial random_polynomial(unsigned degree, Rng& rng);

}  // namespace gstar
