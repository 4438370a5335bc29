#include <doctest.h>

#include "gstar/oscillator.hpp"
#include "support/oracle.hpp"

using namespace gstar;

namespace {

GrassmannElement g(GeneratorIndex x) { return GrassmannElement::generator(1, x); }
GrassmannElement one() { return GrassmannElement::scalar(1, 1.0); }
GrassmannElement number() { return multiply(g(theta_bar(1)), g(theta(1))); }

}  // namespace

TEST_SUITE("oscillator") {
  TEST_CASE("projector symbols") {
    CHECK(projector_symbol(0, 0) == one() - number());
    CHECK(projector_symbol(0, 1) == g(theta(1)));
    CHECK(projector_symbol(1, 0) == g(theta_bar(1)));
    CHECK(projector_symbol(1, 1) == number());
    CHECK(hamiltonian_symbol() == number());
    CHECK_THROWS(projector_symbol(2, 0));
  }

  TEST_CASE("projectors multiply like matrix units") {
    for (unsigned m = 0; m < 2; ++m)
      for (unsigned n = 0; n < 2; ++n)
        for (unsigned p = 0; p < 2; ++p)
          for (unsigned q = 0; q < 2; ++q) {
            const auto expected = n == p ? projector_symbol(m, q) : GrassmannElement(1);
            CHECK(star(projector_symbol(m, n), projector_symbol(p, q)) == expected);
          }
  }

  TEST_CASE("projectors agree with the oracle") {
    for (unsigned m = 0; m < 2; ++m)
      for (unsigned n = 0; n < 2; ++n) {
        oracle::Mat unit = oracle::Mat::Zero(2, 2);
        unit(m, n) = 1.0;
        CHECK(max_abs_difference(projector_symbol(m, n), oracle::symbol_of(1, unit)) < 1e-14);
      }
  }

  TEST_CASE("ladder relations suite") { CHECK(ladder_relations_check().all_passed()); }

  TEST_CASE("matrix of the exponential") {
    const auto e = oscillator_exponential();
    REQUIRE(e.size() == 4);
    for (const auto& x : e) CHECK(x.modes() == kGeneratingModes);
    const auto tb = GrassmannElement::generator(2, theta_bar(1));
    const auto t = GrassmannElement::generator(2, theta(1));
    const auto n = multiply(tb, t);
    const auto c = GrassmannElement::scalar(2, 1.0);
    CHECK(approx_equal(e[0], c - n * 0.5));
    CHECK(approx_equal(e[1], tb));
    CHECK(approx_equal(e[2], t));
    CHECK(approx_equal(e[3], c + n * 0.5));
  }

  TEST_CASE("generating function") {
    const auto phi = generating_function();
    // The exponential closed form disagrees with the matrix-element sum.
    CHECK(max_abs_difference(phi, generating_function_closed_form()) > 0.5);
    CHECK(to_string(phi) == "1 - 0.5 tb1 t1 + tb2 t1 - tb1 t2 + tb2 t2 - 0.5 tb1 tb2 t1 t2");
    CHECK(generating_derivative_check().all_passed());
  }

  TEST_CASE("su(2) Casimir of the number candidate") {
    const auto c = su2_casimir(-number());
    CHECK(approx_equal(c, GrassmannElement::scalar(1, 0.75)));
  }
}
