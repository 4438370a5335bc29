#include <doctest.h>

#include <algorithm>

#include "gstar/fock.hpp"
#include "gstar/suites.hpp"

using namespace gstar;

TEST_SUITE("suites") {
  TEST_CASE("names") {
    const auto& names = suite_names();
    CHECK(std::find(names.begin(), names.end(), "all") != names.end());
    CHECK_THROWS_AS(run_suite("nope", {}), UsageError);
    SuiteOptions big;
    big.n = kMaxSuiteModes + 1;
    CHECK_THROWS_AS(run_suite("fermionic", big), UsageError);
  }

  TEST_CASE("fermionic suite") {
    for (unsigned n = 1; n <= 2; ++n) {
      SuiteOptions o;
      o.n = n;
      o.trials = 40;
      const auto r = fermionic_suite(o);
      CHECK(r.all_passed());
      CHECK(r.find("fermionic.minimal") != nullptr);
    }
    SuiteOptions sym;
    sym.product = ProductKind::symmetric;
    sym.trials = 40;
    CHECK(fermionic_suite(sym).all_passed());
  }

  TEST_CASE("classical limit") {
    SuiteOptions o;
    o.hbar = 0.0;
    o.trials = 40;
    const auto r = fermionic_suite(o);
    CHECK(r.all_passed());
    const auto* c = r.find("fermionic.classical_limit");
    REQUIRE(c != nullptr);
    CHECK(c->residual == 0.0);
  }

  TEST_CASE("oracle comparison") {
    const auto r = oracle_compare(3, 30, 7);
    CHECK(r.pass);
    CHECK(r.max_residual < 1e-12);
    CHECK_THROWS_AS(oracle_compare(kMaxOracleModes + 1, 1, 1), UsageError);
  }

  TEST_CASE("witness stays out of the linear regime") {
    CHECK(witness_lambda().modes() == 2);
    CHECK(witness_argument() == GrassmannElement::generator(2, theta(1)));
  }
}
