#include <doctest.h>

#include "gstar/fock.hpp"
#include "gstar/sampling.hpp"
#include "support/oracle.hpp"

using namespace gstar;

TEST_SUITE("fock") {
  TEST_CASE("ladder operators satisfy the anticommutation relations") {
    for (unsigned n = 1; n <= 3; ++n) {
      const Matrix id = Matrix::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n);
      for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j) {
          const Matrix fi = ladder(n, i, Ladder::annihilate).matrix();
          const Matrix fj = ladder(n, j, Ladder::annihilate).matrix();
          const Matrix fdj = ladder(n, j, Ladder::create).matrix();
          CHECK(oracle::max_abs(fi * fdj + fdj * fi - (i == j ? id : Matrix::Zero(id.rows(), id.cols()))) == 0.0);
          CHECK(oracle::max_abs(fi * fj + fj * fi) == 0.0);
        }
    }
  }

  TEST_CASE("symbol map inverts the operator map") {
    Rng rng(21);
    for (unsigned n = 1; n <= 3; ++n) {
      const auto a = random_element(n, rng);
      CHECK(max_abs_difference(symbol_of(operator_of(a)), a) < 1e-12);
      const FockOperator op(n, Matrix::Random(Eigen::Index{1} << n, Eigen::Index{1} << n));
      CHECK(max_abs_difference(operator_of(symbol_of(op)), op) < 1e-12);
    }
  }

  TEST_CASE("monomial operators are normal-ordered ladder products") {
    const auto tbt = GrassmannElement::product_of(1, {theta_bar(1), theta(1)});
    const Matrix number = ladder(1, 1, Ladder::create).matrix() * ladder(1, 1, Ladder::annihilate).matrix();
    CHECK(oracle::max_abs(operator_of(tbt).matrix() - number) == 0.0);
    CHECK(symbol_of(FockOperator::identity(2)) == GrassmannElement::scalar(2, 1.0));
  }

  TEST_CASE("oracle star agrees with the test oracle") {
    Rng rng(22);
    for (unsigned n = 1; n <= 3; ++n)
      for (int k = 0; k < 10; ++k) {
        const auto a = random_element(n, rng), b = random_element(n, rng);
        CHECK(max_abs_difference(oracle_star(a, b), oracle::star(a, b)) < 1e-12);
      }
  }

  TEST_CASE("coherent states") {
    for (unsigned n = 0; n <= 2; ++n) {
      const auto r = coherent_overlap_check(n);
      CHECK(r.pass);
      CHECK(r.identity_residual == 0.0);
      CHECK(r.overlap_residual == 0.0);
      CHECK(r.symbol_residual == 0.0);
    }
  }

  TEST_CASE("ket coefficients") {
    // c_0 = G and c_1 = Gθ = θ with G = 1 - ½θ̄θ; the bra carries the involution.
    const auto ket = coherent_ket(1, 1);
    REQUIRE(ket.size() == 2);
    const auto gauss = GrassmannElement::scalar(1, 1.0) - GrassmannElement::product_of(1, {theta_bar(1), theta(1)}, 0.5);
    CHECK(ket[0] == gauss);
    CHECK(ket[1] == GrassmannElement::generator(1, theta(1)));
    const auto bra = coherent_bra(1, 1);
    CHECK(bra[0] == gauss);
    CHECK(bra[1] == GrassmannElement::generator(1, theta_bar(1)));
  }

  TEST_CASE("oracle size limit") {
    CHECK_THROWS(operator_of(GrassmannElement::scalar(kMaxOracleModes + 1, 1.0)));
  }
}
