#include <doctest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include "gstar/sampling.hpp"
#include "gstar/star.hpp"
#include "support/oracle.hpp"

using namespace gstar;

namespace {

GrassmannElement g(unsigned n, GeneratorIndex x) { return GrassmannElement::generator(n, x); }
GrassmannElement one(unsigned n) { return GrassmannElement::scalar(n, 1.0); }

constexpr StarKind kSym{ProductKind::symmetric, 1.0};

}  // namespace

TEST_SUITE("star") {
  TEST_CASE("minimal relations") {
    const auto t = g(1, theta(1)), tb = g(1, theta_bar(1));
    CHECK(star(tb, t) == multiply(tb, t));
    CHECK(star(t, tb) == multiply(t, tb) + one(1));
    CHECK(star(t, t).is_zero());
    CHECK(star_anticommutator(tb, t) == one(1));
    CHECK(star(g(2, theta(1)), g(2, theta_bar(2))) == multiply(g(2, theta(1)), g(2, theta_bar(2))));
  }

  TEST_CASE("symmetric relations") {
    const auto t = g(1, theta(1)), tb = g(1, theta_bar(1));
    const auto half = GrassmannElement::scalar(1, 0.5);
    CHECK(star(t, tb, kSym) == multiply(t, tb) + half);
    CHECK(star(tb, t, kSym) == multiply(tb, t) + half);
    CHECK(star_anticommutator(t, tb, kSym) == one(1));
  }

  TEST_CASE("agrees with an independent Fock oracle") {
    Rng rng(11);
    for (unsigned n = 1; n <= 3; ++n)
      for (int k = 0; k < 30; ++k) {
        const auto a = random_element(n, rng), b = random_element(n, rng);
        CHECK(max_abs_difference(star(a, b), oracle::star(a, b)) < 1e-12);
      }
  }

  TEST_CASE("hbar scales each contraction") {
    Rng rng(12);
    const double hbar = 0.37;
    for (int k = 0; k < 20; ++k) {
      const auto a = random_element(2, rng), b = random_element(2, rng);
      const double s = std::sqrt(hbar);
      const auto expected = rescale_generators(star(rescale_generators(a, s), rescale_generators(b, s)), 1.0 / s);
      CHECK(max_abs_difference(star(a, b, {ProductKind::coherent, hbar}), expected) < 1e-12);
    }
    const auto t = g(1, theta(1)), tb = g(1, theta_bar(1));
    CHECK(star(t, tb, {ProductKind::coherent, 2.0}) == multiply(t, tb) + GrassmannElement::scalar(1, 2.0));
  }

  TEST_CASE("hbar = 0 is the pointwise product") {
    Rng rng(13);
    const auto a = random_element(3, rng), b = random_element(3, rng);
    CHECK(star(a, b, {ProductKind::coherent, 0.0}) == multiply(a, b));
    CHECK(star(a, b, {ProductKind::symmetric, 0.0}) == multiply(a, b));
    CHECK_THROWS_AS(ContractionTable::for_kind(1, {ProductKind::coherent, -1.0}), DomainError);
  }

  TEST_CASE("equivalence map") {
    const auto t = g(1, theta(1)), tb = g(1, theta_bar(1));
    const auto tbt = multiply(tb, t);
    CHECK(T_map(one(1)) == one(1));
    CHECK(T_map(t) == t);
    CHECK(T_map(tbt) == tbt - GrassmannElement::scalar(1, 0.5));
    Rng rng(14);
    for (int k = 0; k < 20; ++k) {
      const auto a = random_element(2, rng), b = random_element(2, rng);
      CHECK(max_abs_difference(star(T_map(a), T_map(b)), T_map(star(a, b, kSym))) < 1e-12);
      CHECK(max_abs_difference(T_inverse(T_map(a)), a) < 1e-14);
    }
  }

  TEST_CASE("grading and unit") {
    Rng rng(15);
    const auto a = random_homogeneous(2, Parity::odd, rng), b = random_homogeneous(2, Parity::odd, rng);
    CHECK(parity_of(star(a, b)) == Parity::even);
    CHECK(star(one(2), a) == a);
    CHECK(star(a, one(2)) == a);
  }

  TEST_CASE("star exponential") {
    CHECK(star_exp(GrassmannElement(2)) == one(2));
    const Complex alpha(0.4, -0.7);
    // λ = (α/2) θ̄1θ̄2 − (ᾱ/2) θ1θ2 against the matrix exponential of its operator.
    const auto lambda = GrassmannElement::product_of(2, {theta_bar(1), theta_bar(2)}, alpha / 2.0) -
                        GrassmannElement::product_of(2, {theta(1), theta(2)}, std::conj(alpha) / 2.0);
    const oracle::Mat op = oracle::operator_of(lambda);
    const auto expected = oracle::symbol_of(2, op.exp());
    CHECK(max_abs_difference(star_exp(lambda), expected) < 1e-12);
    CHECK(max_abs_difference(star(star_exp(-lambda), star_exp(lambda)), one(2)) < 1e-12);
    // A scalar part is factored out.
    const auto shifted = lambda + GrassmannElement::scalar(2, 0.3);
    CHECK(max_abs_difference(star_exp(shifted), star_exp(lambda) * std::exp(Complex(0.3))) < 1e-12);
  }

  TEST_CASE("product kind names") {
    CHECK(product_kind_from_string("symmetric") == ProductKind::symmetric);
    CHECK(to_string(ProductKind::coherent) == "coherent");
    CHECK_THROWS_AS(product_kind_from_string("weyl"), DomainError);
  }
}
