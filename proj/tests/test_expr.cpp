#include <doctest.h>

#include "gstar/expr.hpp"
#include "gstar/sampling.hpp"

using namespace gstar;

namespace {

GrassmannElement fermionic(std::string_view source, unsigned n, double hbar = 1.0) {
  EvalConfig cfg;
  cfg.n = n;
  cfg.hbar = hbar;
  const auto v = evaluate(source, cfg);
  REQUIRE(std::holds_alternative<GrassmannElement>(v));
  return std::get<GrassmannElement>(v);
}

GrassmannElement g(unsigned n, GeneratorIndex x) { return GrassmannElement::generator(n, x); }

}  // namespace

TEST_SUITE("expr") {
  TEST_CASE("tree shapes") {
    const auto juxt = parse("tb1 t1", 1);
    CHECK(juxt.kind == NodeKind::mul);
    REQUIRE(juxt.children.size() == 2);
    CHECK(juxt.children[0].generator == theta_bar(1));
    CHECK(juxt.children[1].generator == theta(1));

    const auto st = parse("t1 @ tb1", 1);
    CHECK(st.kind == NodeKind::star);
    CHECK(parse("t1 @@ tb1", 1).kind == NodeKind::star_symmetric);
    CHECK(parse("z @s zb", 1).kind == NodeKind::star_super);
  }

  TEST_CASE("precedence and associativity") {
    CHECK(same_structure(parse("t1 + tb1 @ t1", 1), parse("t1 + (tb1 @ t1)", 1)));
    CHECK(same_structure(parse("t1 @ tb1 t1", 1), parse("t1 @ (tb1 t1)", 1)));
    CHECK(same_structure(parse("t1 - tb1 - t1", 1), parse("(t1 - tb1) - t1", 1)));
    CHECK(same_structure(parse("-t1 tb1", 1), parse("(-t1) tb1", 1)));
    CHECK_FALSE(same_structure(parse("t1 @ tb1", 1), parse("tb1 @ t1", 1)));
  }

  TEST_CASE("errors carry positions") {
    try {
      parse("t1 +\n  tb3", 2);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 3);
    }
    CHECK_THROWS_AS(parse("t1 +", 1), ParseError);
    CHECK_THROWS_AS(parse("(t1", 1), ParseError);
    CHECK_THROWS_AS(parse("t0", 1), ParseError);
    CHECK_THROWS_AS(parse("t1 $ t1", 1), ParseError);
    CHECK_THROWS(parse("t1", 0));
  }

  TEST_CASE("print round trip") {
    const char* sources[] = {
        "t1 @ tb1", "2 - 0.5i tb1 t1", "exp(i tb1 t1) @@ t2", "-(t1 + tb2) * t2 @ tb1",
        "z @s zb + t1 @s tb1", "3.25 - i", "tb1 tb2 t2 t1 @ (1 + t1)",
    };
    for (const char* s : sources) {
      const auto ast = parse(s, 2);
      const auto again = parse(print(ast), 2);
      CHECK_MESSAGE(same_structure(ast, again), s);
      CHECK(print(again) == print(ast));
    }
  }

  TEST_CASE("printed elements evaluate back to themselves") {
    Rng rng(51);
    for (unsigned n = 1; n <= 3; ++n) {
      const auto a = random_element(n, rng);
      CHECK(max_abs_difference(fermionic(to_string(a), n), a) < 1e-12);
    }
  }

  TEST_CASE("evaluation") {
    CHECK(to_string(fermionic("t1 @ tb1", 1)) == "1 - tb1 t1");
    CHECK(fermionic("t1 @ tb1", 1, 2.0) == multiply(g(1, theta(1)), g(1, theta_bar(1))) + GrassmannElement::scalar(1, 2.0));
    CHECK(fermionic("t1 @@ tb1 + tb1 @@ t1", 1) == GrassmannElement::scalar(1, 1.0));
    CHECK(fermionic("exp(tb1 t1)", 1) == exp_nilpotent(multiply(g(1, theta_bar(1)), g(1, theta(1)))));
    CHECK(fermionic("t1 t1", 1).is_zero());
  }

  TEST_CASE("unicode aliases") {
    CHECK(same_structure(parse("θ1 @ θ̄1", 1), parse("t1 @ tb1", 1)));
    CHECK(same_structure(parse("θ̅2", 2), parse("tb2", 2)));
  }

  TEST_CASE("sectors") {
    EvalConfig cfg;
    CHECK(uses_super_sector(parse("z t1", 1)));
    CHECK_FALSE(uses_super_sector(parse("t1 @ tb1", 1)));
    cfg.sector = Sector::fermionic;
    CHECK_THROWS_AS(evaluate("z t1", cfg), DomainError);
    cfg.sector = Sector::super;
    CHECK_THROWS_AS(evaluate("z @ zb", cfg), DomainError);
    CHECK(std::holds_alternative<SuperSymbol>(evaluate("t1 @s tb1", cfg)));
    cfg.sector = Sector::automatic;
    cfg.n = 2;
    CHECK_THROWS_AS(evaluate("z @s zb", cfg), DomainError);
  }
}
