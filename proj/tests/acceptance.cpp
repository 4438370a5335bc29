// Acceptance criteria 1-14. Usage: gstar_acceptance [k]
// Prints one PASS/FAIL line per criterion; exit status 1 if any selected criterion fails.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "gstar/boson.hpp"
#include "gstar/covariance.hpp"
#include "gstar/fock.hpp"
#include "gstar/oscillator.hpp"
#include "gstar/sampling.hpp"
#include "gstar/star.hpp"
#include "gstar/suites.hpp"
#include "gstar/super.hpp"
#include "support/oracle.hpp"

using namespace gstar;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

GrassmannElement gen(unsigned n, GeneratorIndex g) { return GrassmannElement::generator(n, g); }
GrassmannElement basis(unsigned n, std::uint32_t k) { return GrassmannElement::monomial(n, Monomial{k}); }
GrassmannElement scalar(unsigned n, double c) { return GrassmannElement::scalar(n, c); }

const Check& require(const Report& r, std::string_view id) {
  const Check* c = r.find(id);
  if (c == nullptr) {
    std::fprintf(stderr, "missing check %.*s\n", static_cast<int>(id.size()), id.data());
    std::exit(2);
  }
  return *c;
}

// 1. Minimal relations at N = 3, exact.
Outcome minimal_relations() {
  const unsigned n = 3;
  unsigned bad = 0;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= n; ++j) {
      const auto ti = gen(n, theta(i)), tj = gen(n, theta(j));
      const auto bi = gen(n, theta_bar(i)), bj = gen(n, theta_bar(j));
      bad += !(star(bi, tj) == multiply(bi, tj));
      bad += !(star(ti, tj) == multiply(ti, tj));
      bad += !(star(bi, bj) == multiply(bi, bj));
      bad += !(star(ti, bj) == multiply(ti, bj) + scalar(n, i == j ? 1.0 : 0.0));
    }
  return {bad == 0, std::to_string(bad) + " of 36 relations differ"};
}

// 2. Anticommutators and nilpotency at N = 3, exact.
Outcome anticommutators() {
  const unsigned n = 3;
  unsigned bad = 0;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= n; ++j) {
      const auto ti = gen(n, theta(i)), tj = gen(n, theta(j));
      const auto bi = gen(n, theta_bar(i)), bj = gen(n, theta_bar(j));
      bad += !(star_anticommutator(bi, tj) == scalar(n, i == j ? 1.0 : 0.0));
      bad += !star_anticommutator(ti, tj).is_zero();
      bad += !star_anticommutator(bi, bj).is_zero();
    }
    bad += !star(gen(n, theta(i)), gen(n, theta(i))).is_zero();
    bad += !star(gen(n, theta_bar(i)), gen(n, theta_bar(i))).is_zero();
  }
  return {bad == 0, std::to_string(bad) + " of 33 relations differ"};
}

// 3. Oracle equivalence, 500 random pairs at N = 1, 2, 3.
Outcome oracle_equivalence() {
  Rng rng(3003);
  double worst = 0.0;
  for (unsigned n = 1; n <= 3; ++n)
    for (int t = 0; t < 500; ++t) {
      const auto a = random_element(n, rng);
      const auto b = random_element(n, rng);
      worst = std::max(worst, max_abs_difference(star(a, b), symbol_of(operator_of(a) * operator_of(b))));
    }
  return {worst < 1e-12, "max residual " + fmt(worst) + " (tol 1e-12)"};
}

// 4. Associativity of ⋆, ⋆̂ and ⋆_susy.
Outcome associativity() {
  double worst = 0.0;
  for (const auto kind : {ProductKind::coherent, ProductKind::symmetric}) {
    const StarKind k{kind, 1.0};
    for (std::uint32_t x = 0; x < 16; ++x)
      for (std::uint32_t y = 0; y < 16; ++y) {
        const auto xy = star(basis(2, x), basis(2, y), k);
        for (std::uint32_t z = 0; z < 16; ++z) {
          worst = std::max(worst, max_abs_difference(star(xy, basis(2, z), k),
                                                     star(basis(2, x), star(basis(2, y), basis(2, z), k), k)));
        }
      }
    Rng rng(4004 + static_cast<unsigned>(kind));
    for (int t = 0; t < 200; ++t) {
      const auto a = random_element(3, rng), b = random_element(3, rng), c = random_element(3, rng);
      worst = std::max(worst, max_abs_difference(star(star(a, b, k), c, k), star(a, star(b, c, k), k)));
    }
  }
  // ⋆_susy on random polynomial symbols, exactly and on the exact Fock block.
  Rng rng(4010);
  auto random_super = [&] {
    SuperPolynomial s;
    for (unsigned f = 0; f < 4; ++f) s[f] = random_polynomial(2, rng);
    return s;
  };
  double susy = 0.0;
  for (int t = 0; t < 50; ++t) {
    const auto a = random_super(), b = random_super(), c = random_super();
    susy = std::max(susy, max_abs_difference(super_star(super_star(a, b), c), super_star(a, super_star(b, c))));
    const auto fa = to_fock(a, kDefaultCutoff), fb = to_fock(b, kDefaultCutoff), fc = to_fock(c, kDefaultCutoff);
    // Fock entries reach ~1e4 here, so the Fock path is measured relative to the largest entry.
    const auto left = super_star(super_star(fa, fb), fc);
    double scale = 1.0;
    for (unsigned f = 0; f < 4; ++f) scale = std::max(scale, left[f].matrix().cwiseAbs().maxCoeff());
    susy = std::max(susy, max_exact_difference(left, super_star(fa, super_star(fb, fc))) / scale);
  }
  worst = std::max(worst, susy);
  return {worst < 1e-12, "max residual " + fmt(worst) + " (susy " + fmt(susy) + ", tol 1e-12)"};
}

// 5. Resolution of identity and overlap, N = 1, 2.
Outcome overlap() {
  bool ok = true;
  std::string detail;
  for (unsigned n = 1; n <= 2; ++n) {
    const auto r = coherent_overlap_check(n);
    ok = ok && r.pass;
    detail += "N=" + std::to_string(n) + ": identity " + fmt(r.identity_residual) + " overlap " +
              fmt(r.overlap_residual) + " symbol " + fmt(r.symbol_residual) + "; ";
  }
  return {ok, detail};
}

// 6. Covariance for 50 random α at N = 2, 3 over every basis monomial; quartic witness violates it.
Outcome covariance() {
  Rng rng(6006);
  double worst = 0.0;
  std::string where;
  for (unsigned n = 2; n <= 3; ++n)
    for (int t = 0; t < 50; ++t) {
      const UnitaryTransform u(lambda_symbol(random_alpha(n, rng)));
      for (std::uint32_t k = 0; k < (1u << (2 * n)); ++k) {
        const double r = check_covariance(u, basis(n, k)).residual;
        if (r > worst) {
          worst = r;
          where = "N=" + std::to_string(n) + " a=" + to_string(basis(n, k));
        }
      }
    }
  const double witness = check_covariance(witness_lambda(), witness_argument()).residual;
  const bool ok = worst < 1e-10 && witness > 1e-3;
  return {ok, "max residual " + fmt(worst) + " at " + where + " (tol 1e-10); witness " + fmt(witness) + " (> 1e-3)"};
}

// 7. Bogoliubov matrices against oracle conjugation, N ≤ 3.
Outcome bogoliubov() {
  Rng rng(7007);
  double conj = 0.0;
  double canonical = 0.0;
  for (unsigned n = 1; n <= 3; ++n)
    for (int t = 0; t < 50; ++t) {
      const auto alpha = random_alpha(n, rng);
      const auto bp = bogoliubov_from_alpha(alpha);
      canonical = std::max(canonical, bp.canonical_residual());
      const Matrix& a = alpha.matrix();
      const auto dim = Eigen::Index{1} << n;
      oracle::Mat big_lambda = oracle::Mat::Zero(dim, dim);
      for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j) {
          big_lambda += a(i - 1, j - 1) / 2.0 * oracle::creator(n, i) * oracle::creator(n, j) +
                        std::conj(a(i - 1, j - 1)) / 2.0 * oracle::annihilator(n, i) * oracle::annihilator(n, j);
        }
      const oracle::Mat fwd = big_lambda.exp();
      const oracle::Mat bwd = oracle::Mat(-big_lambda).exp();
      std::vector<oracle::Mat> f(n);
      for (unsigned i = 1; i <= n; ++i) {
        oracle::Mat mixed = oracle::Mat::Zero(dim, dim);
        for (unsigned j = 1; j <= n; ++j)
          mixed += bp.U(i - 1, j - 1) * oracle::annihilator(n, j) + bp.V(i - 1, j - 1) * oracle::creator(n, j);
        conj = std::max(conj, oracle::max_abs(bwd * oracle::annihilator(n, i) * fwd - mixed));
        f[i - 1] = mixed;
      }
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
          const oracle::Mat fd = f[j].adjoint();
          oracle::Mat anti = f[i] * fd + fd * f[i];
          if (i == j) anti -= oracle::Mat::Identity(dim, dim);
          canonical = std::max({canonical, oracle::max_abs(anti), oracle::max_abs(f[i] * f[j] + f[j] * f[i])});
        }
    }
  return {conj <= 1e-10 && canonical <= 1e-10,
          "conjugation " + fmt(conj) + ", canonical " + fmt(canonical) + " (tol 1e-10)"};
}

// 8. Derivation bracket at N = 2.
Outcome bracket() {
  Rng rng(8008);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const auto l1 = random_anti_hermitian_even(2, rng);
    const auto l2 = random_anti_hermitian_even(2, rng);
    worst = std::max(worst, d_lambda_bracket_check(l1, l2));
  }
  return {worst < 1e-12, "max residual " + fmt(worst) + " (tol 1e-12)"};
}

// 9. Equivalence map on all N = 1 basis pairs, exact.
Outcome equivalence() {
  double worst = 0.0;
  for (std::uint32_t x = 0; x < 4; ++x)
    for (std::uint32_t y = 0; y < 4; ++y) {
      const auto a = basis(1, x), b = basis(1, y);
      worst = std::max(worst, max_abs_difference(star(T_map(a), T_map(b)),
                                                 T_map(star(a, b, {ProductKind::symmetric, 1.0}))));
    }
  return {worst == 0.0, "max residual " + fmt(worst) + " (exact)"};
}

// 10. Fermionic oscillator relations, exact.
Outcome oscillator() {
  const Report r = ladder_relations_check();
  double worst = 0.0;
  for (const char* id : {"osc.vacuum", "osc.completion", "osc.eigen.left", "osc.eigen.right", "osc.ladder.theta_left",
                         "osc.ladder.theta_right", "osc.ladder.thetabar_left", "osc.ladder.thetabar_right"}) {
    worst = std::max(worst, require(r, id).residual);
  }
  return {worst == 0.0, "max residual " + fmt(worst) + " (exact)"};
}

// 11. su(2) brackets and Casimir ¼.
Outcome su2() {
  const Report r = su2_star_check();
  const Check& brackets = require(r, "su2.brackets");
  const Check& casimir = require(r, "su2.casimir");
  const auto c = su2_casimir(GrassmannElement::product_of(1, {theta_bar(1), theta(1)}, -1.0));
  return {brackets.residual == 0.0 && casimir.residual == 0.0,
          "brackets " + fmt(brackets.residual) + ", |C - 1/4| " + fmt(casimir.residual) + " with C = " + to_string(c)};
}

// 12. Bosonic ladder relations and polynomial/Fock agreement.
Outcome boson() {
  const Report r = boson_relations_check(kDefaultCutoff, 50, 12012, 4);
  double ladder = 0.0;
  for (const char* id : {"boson.ladder.z_left", "boson.ladder.zbar_left", "boson.ladder.z_right", "boson.ladder.zbar_right"})
    ladder = std::max(ladder, require(r, id).residual);
  const double agree = require(r, "boson.poly_vs_fock").residual;
  return {ladder == 0.0 && agree < 1e-10, "ladder " + fmt(ladder) + " (exact), poly vs Fock " + fmt(agree) + " (tol 1e-10)"};
}

// 13. sl(1/1) relations below the cutoff.
Outcome susy() {
  const Report r = susy_check(kDefaultCutoff, 20, 13013);
  double exact = 0.0;
  double fock = 0.0;
  for (const char* id : {"susy.anticommutator", "susy.nilpotent", "susy.commutator"}) {
    exact = std::max(exact, require(r, id).residual);
    fock = std::max(fock, require(r, std::string(id) + ".fock").residual);
  }
  return {exact == 0.0 && fock <= 1e-12,
          "polynomial symbols " + fmt(exact) + " (exact), Fock block " + fmt(fock) + " (tol 1e-12)"};
}

// 14. ħ = 0 star equals the pointwise product, exact.
Outcome classical_limit() {
  Rng rng(14014);
  double worst = 0.0;
  for (unsigned n = 1; n <= 3; ++n)
    for (int t = 0; t < 200; ++t) {
      const auto a = random_element(n, rng), b = random_element(n, rng);
      for (const auto kind : {ProductKind::coherent, ProductKind::symmetric})
        worst = std::max(worst, max_abs_difference(star(a, b, {kind, 0.0}), multiply(a, b)));
    }
  return {worst == 0.0, "max residual " + fmt(worst) + " (exact)"};
}

struct Criterion {
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {"minimal star relations, N = 3", minimal_relations},
      {"star anticommutators and nilpotency, N = 3", anticommutators},
      {"oracle equivalence, 500 pairs at N = 1, 2, 3", oracle_equivalence},
      {"associativity of the three products", associativity},
      {"resolution of identity and overlap, N = 1, 2", overlap},
      {"covariance for quadratic lambda, witness violation", covariance},
      {"Bogoliubov matrices against oracle conjugation", bogoliubov},
      {"derivation bracket, N = 2", bracket},
      {"equivalence map T, N = 1 basis pairs", equivalence},
      {"fermionic oscillator relations", oscillator},
      {"su(2) brackets and Casimir 1/4", su2},
      {"bosonic ladder relations and representation agreement", boson},
      {"sl(1/1) relations", susy},
      {"classical limit hbar = 0", classical_limit},
  };

  std::size_t first = 0;
  std::size_t last = criteria.size();
  if (argc > 1) {
    const int k = std::atoi(argv[1]);
    if (k < 1 || k > static_cast<int>(criteria.size())) {
      std::fprintf(stderr, "usage: %s [1-%zu]\n", argv[0], criteria.size());
      return 2;
    }
    first = static_cast<std::size_t>(k - 1);
    last = first + 1;
  }

  int failures = 0;
  for (std::size_t i = first; i < last; ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::printf("AC%02zu %s  %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].title, o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
