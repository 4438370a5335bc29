#include <doctest.h>

#include "gstar/expr.hpp"
#include "gstar/super.hpp"
#include "support/oracle.hpp"

using namespace gstar;

TEST_SUITE("super") {
  TEST_CASE("expression example") {
    EvalConfig cfg;
    const auto v = evaluate("(z @s zb) + (t1 @s tb1)", cfg);
    CHECK(to_string(v) == "2 + z zb - tb1 t1");
  }

  TEST_CASE("supercharges") {
    const auto s = supercharge_symbols();
    CHECK(max_abs_difference(super_star(s.q_minus, s.q_minus), SuperPolynomial{}) == 0.0);
    CHECK(max_abs_difference(super_star(s.q_plus, s.q_plus), SuperPolynomial{}) == 0.0);
    const auto anti = super_star(s.q_plus, s.q_minus) + super_star(s.q_minus, s.q_plus);
    CHECK(max_abs_difference(anti, s.h) == 0.0);
    CHECK(max_abs_difference(involution(s.q_minus), s.q_plus) == 0.0);
  }

  TEST_CASE("operator matches the tensor product oracle") {
    const unsigned cutoff = 8;
    const auto q = to_fock(supercharge_symbols().q_minus, cutoff);
    const Matrix op = super_operator(q);
    const oracle::Mat expected = oracle::kron(oracle::boson_operator(BosonPolynomial::z(), cutoff),
                                              oracle::operator_of(GrassmannElement::generator(1, theta_bar(1))));
    const Eigen::Index e = 2 * (q[1].exact_through() + 1);
    REQUIRE(e > 0);
    CHECK(oracle::max_abs(op.topLeftCorner(e, e) - expected.topLeftCorner(e, e)) < 1e-12);
    CHECK(max_exact_difference(super_symbol_of(cutoff, op), q) < 1e-12);
  }

  TEST_CASE("mixed representations are rejected") {
    const SuperSymbol a = supercharge_symbols().h;
    const SuperSymbol b = to_fock(supercharge_symbols().h, 4);
    CHECK_THROWS_AS(super_star(a, b), DomainError);
  }

  TEST_CASE("JSON round trip in both representations") {
    const auto h = supercharge_symbols().h;
    const auto p = super_symbol_from_json(to_json(SuperSymbol{h}));
    REQUIRE(std::holds_alternative<SuperPolynomial>(p));
    CHECK(max_abs_difference(std::get<SuperPolynomial>(p), h) == 0.0);
    const auto f = to_fock(h, 6);
    const auto back = super_symbol_from_json(to_json(SuperSymbol{f}));
    REQUIRE(std::holds_alternative<SuperFock>(back));
    CHECK(max_exact_difference(std::get<SuperFock>(back), f) == 0.0);
  }

  TEST_CASE("relations suite") { CHECK(susy_check(8, 10, 1).all_passed()); }
}
