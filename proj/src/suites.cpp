#include "gstar/suites.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "gstar/boson.hpp"
#include "gstar/covariance.hpp"
#include "gstar/fock.hpp"
#include "gstar/oscillator.hpp"
#include "gstar/sampling.hpp"
#include "gstar/super.hpp"

namespace gstar {

namespace {

constexpr double kOracleTol = 1e-12;
constexpr double kTransformTol = 1e-10;

// Each check draws from its own stream so reports do not depend on order.
Rng stream(const SuiteOptions& o, std::uint64_t tag) { return Rng(o.seed * 0x9E3779B97F4A7C15ull + tag); }

double relative(const GrassmannElement& a, const GrassmannElement& b) {
  return max_abs_difference(a, b) / std::max(1.0, b.max_abs());
}

std::uint32_t basis_size(unsigned n) { return 1u << (2 * n); }

GrassmannElement basis(unsigned n, std::uint32_t k) { return GrassmannElement::monomial(n, Monomial{k}); }

GrassmannElement gen(unsigned n, GeneratorIndex g) { return GrassmannElement::generator(n, g); }

// Product computed without the star engine: rescale to ħ = 1, multiply the
// Fock operators, and for ⋆̂ conjugate by the equivalence map.
GrassmannElement reference_product(const GrassmannElement& a, const GrassmannElement& b, StarKind k) {
  if (k.hbar == 0.0) return multiply(a, b);
  const double s = std::sqrt(k.hbar);
  GrassmannElement x = rescale_generators(a, s);
  GrassmannElement y = rescale_generators(b, s);
  GrassmannElement p;
  if (k.kind == ProductKind::symmetric) {
    p = T_inverse(oracle_star(T_map(x), T_map(y)));
  } else {
    p = oracle_star(x, y);
  }
  return rescale_generators(p, 1.0 / s);
}

void require_modes(const SuiteOptions& o, const char* suite) {
  if (o.n < 1 || o.n > kMaxSuiteModes) {
    throw UsageError(std::string(suite) + " suite: --n must lie in 1.." + std::to_string(kMaxSuiteModes));
  }
  if (!(o.hbar >= 0.0) || !std::isfinite(o.hbar)) throw UsageError("--hbar must be a finite value >= 0");
  if (o.trials < 1) throw UsageError("--trials must be positive");
}

// Fermionic suite -------------------------------------------------------------

void minimal_relations(Report& r, const SuiteOptions& o) {
  const unsigned n = o.n;
  const StarKind k{ProductKind::coherent, o.hbar};
  double rel = 0.0;
  double anti = 0.0;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= n; ++j) {
      const auto ti = gen(n, theta(i));
      const auto tj = gen(n, theta(j));
      const auto bi = gen(n, theta_bar(i));
      const auto bj = gen(n, theta_bar(j));
      const auto delta = GrassmannElement::scalar(n, i == j ? o.hbar : 0.0);
      rel = std::max({rel, max_abs_difference(star(bi, tj, k), multiply(bi, tj)),
                      max_abs_difference(star(ti, tj, k), multiply(ti, tj)),
                      max_abs_difference(star(bi, bj, k), multiply(bi, bj)),
                      max_abs_difference(star(ti, bj, k), multiply(ti, bj) + delta)});
      anti = std::max({anti, max_abs_difference(star_anticommutator(bi, tj, k), delta),
                       star_anticommutator(ti, tj, k).max_abs(), star_anticommutator(bi, bj, k).max_abs()});
    }
    anti = std::max({anti, star(gen(n, theta(i)), gen(n, theta(i)), k).max_abs(),
                     star(gen(n, theta_bar(i)), gen(n, theta_bar(i)), k).max_abs()});
  }
  r.add(make_check("fermionic.minimal", "tb_i*t_j = tb_i t_j, t_i*tb_j = t_i tb_j + hbar delta_ij", rel, 0.0));
  r.add(make_check("fermionic.anticommutator", "{tb_i, t_j}* = hbar delta_ij, {t_i, t_j}* = 0, t_i*t_i = 0",
                   anti, 0.0));

  const StarKind ks{ProductKind::symmetric, o.hbar};
  double sym = 0.0;
  for (unsigned i = 1; i <= n; ++i) {
    const auto t = gen(n, theta(i));
    const auto b = gen(n, theta_bar(i));
    const auto half = GrassmannElement::scalar(n, o.hbar / 2);
    sym = std::max({sym, max_abs_difference(star(t, b, ks), multiply(t, b) + half),
                    max_abs_difference(star(b, t, ks), multiply(b, t) + half),
                    max_abs_difference(star_anticommutator(t, b, ks), GrassmannElement::scalar(n, o.hbar))});
  }
  r.add(make_check("fermionic.symmetric.minimal", "t^tb = t tb + hbar/2, tb^t = tb t + hbar/2", sym, 0.0));
}

void oracle_checks(Report& r, const SuiteOptions& o) {
  if (o.hbar == 0.0) return;
  for (const auto kind : {ProductKind::coherent, ProductKind::symmetric}) {
    const auto cmp = oracle_compare(o.n, o.trials, o.seed + static_cast<unsigned>(kind), {kind, o.hbar});
    r.add(make_check(std::string("fermionic.oracle.") + std::string(to_string(kind)),
                     "a*b = symbol(op(a) op(b)) on random pairs", cmp.max_residual, kOracleTol));
  }
  Rng rng = stream(o, 11);
  double round_trip = 0.0;
  for (unsigned t = 0; t < o.trials; ++t) {
    const auto a = random_element(o.n, rng);
    round_trip = std::max(round_trip, max_abs_difference(symbol_of(operator_of(a)), a));
  }
  r.add(make_check("fermionic.oracle.round_trip", "symbol(op(a)) = a", round_trip, kOracleTol));
}

void associativity(Report& r, const SuiteOptions& o) {
  const unsigned n = o.n;
  for (const auto kind : {ProductKind::coherent, ProductKind::symmetric}) {
    const StarKind k{kind, o.hbar};
    double worst = 0.0;
    if (n <= 2) {
      const std::uint32_t d = basis_size(n);
      for (std::uint32_t x = 0; x < d; ++x)
        for (std::uint32_t y = 0; y < d; ++y) {
          const auto xy = star(basis(n, x), basis(n, y), k);
          for (std::uint32_t z = 0; z < d; ++z) {
            const auto lhs = star(xy, basis(n, z), k);
            const auto rhs = star(basis(n, x), star(basis(n, y), basis(n, z), k), k);
            worst = std::max(worst, relative(lhs, rhs));
          }
        }
    } else {
      Rng rng = stream(o, 20 + static_cast<unsigned>(kind));
      for (unsigned t = 0; t < o.trials; ++t) {
        const auto a = random_element(n, rng);
        const auto b = random_element(n, rng);
        const auto c = random_element(n, rng);
        worst = std::max(worst, relative(star(star(a, b, k), c, k), star(a, star(b, c, k), k)));
      }
    }
    r.add(make_check(std::string("fermionic.associativity.") + std::string(to_string(kind)),
                     n <= 2 ? "(a*b)*c = a*(b*c), all basis triples" : "(a*b)*c = a*(b*c), random triples",
                     worst, kOracleTol, "relative to max |a*(b*c)|"));
  }
}

void structural(Report& r, const SuiteOptions& o) {
  const unsigned n = o.n;
  const StarKind k{o.product, o.hbar};
  Rng rng = stream(o, 30);
  double grading = 0.0;
  double unit = 0.0;
  double classical = 0.0;
  const auto one = GrassmannElement::scalar(n, 1.0);
  for (unsigned t = 0; t < o.trials; ++t) {
    const Parity pa = t % 2 ? Parity::odd : Parity::even;
    const Parity pb = t % 3 ? Parity::odd : Parity::even;
    const auto a = random_homogeneous(n, pa, rng);
    const auto b = random_homogeneous(n, pb, rng);
    const auto ab = star(a, b, k);
    const auto wrong = (pa == pb) ? ab.odd_part() : ab.even_part();
    grading = std::max(grading, wrong.max_abs());
    unit = std::max({unit, max_abs_difference(star(one, a, k), a), max_abs_difference(star(a, one, k), a)});
    const auto x = random_element(n, rng);
    const auto y = random_element(n, rng);
    for (const auto kind : {ProductKind::coherent, ProductKind::symmetric}) {
      classical = std::max(classical, max_abs_difference(star(x, y, {kind, 0.0}), multiply(x, y)));
    }
  }
  r.add(make_check("fermionic.grading", "parity(a*b) = parity(a) parity(b)", grading, 0.0));
  r.add(make_check("fermionic.unit", "1*a = a*1 = a", unit, 0.0));
  r.add(make_check("fermionic.classical_limit", "a*b = ab at hbar = 0", classical, 0.0));
}

void equivalence(Report& r, const SuiteOptions& o) {
  const unsigned n = o.n;
  const StarKind kc{ProductKind::coherent, o.hbar};
  const StarKind ks{ProductKind::symmetric, o.hbar};
  double inter = 0.0;
  double inverse = 0.0;
  auto step = [&](const GrassmannElement& a, const GrassmannElement& b) {
    inter = std::max(inter, relative(star(T_map(a, o.hbar), T_map(b, o.hbar), kc), T_map(star(a, b, ks), o.hbar)));
    inverse = std::max(inverse, max_abs_difference(T_inverse(T_map(a, o.hbar), o.hbar), a));
  };
  if (n <= 2) {
    const std::uint32_t d = basis_size(n);
    for (std::uint32_t x = 0; x < d; ++x)
      for (std::uint32_t y = 0; y < d; ++y) step(basis(n, x), basis(n, y));
  } else {
    Rng rng = stream(o, 40);
    for (unsigned t = 0; t < o.trials; ++t) {
      const auto a = random_element(n, rng);
      step(a, random_element(n, rng));
    }
  }
  r.add(make_check("fermionic.equivalence", "T(a)*T(b) = T(a^b)", inter, kOracleTol, "relative to max |T(a^b)|"));
  r.add(make_check("fermionic.equivalence.inverse", "T^-1(T(a)) = a", inverse, kOracleTol));
}

void overlap(Report& r, const SuiteOptions& o) {
  for (unsigned m = 1; m <= std::min(o.n, 2u); ++m) {
    const auto rep = coherent_overlap_check(m);
    const std::string id = "fermionic.coherent.n" + std::to_string(m);
    r.add(make_check(id + ".identity", "integral |eta><eta| dmu = 1", rep.identity_residual, 0.0));
    r.add(make_check(id + ".overlap", "|<theta|eta>|^2 = exp(-(etabar - thetabar)(eta - theta))",
                     rep.overlap_residual, 0.0));
    r.add(make_check(id + ".symbol", "<theta|A|theta> = symbol(A)", rep.symbol_residual, 0.0));
  }
}

// Covariance suite ------------------------------------------------------------

struct Conjugation {
  Matrix forward;   // e^{Λ}
  Matrix backward;  // e^{−Λ}
};

Conjugation conjugation(const GrassmannElement& lambda) {
  const Matrix op = operator_of(lambda).matrix();
  return {op.exp(), Matrix(-op).exp()};
}

double bogoliubov_oracle_residual(const AlphaMatrix& alpha, const BogoliubovPair& bp, double& anticommutator) {
  const unsigned n = alpha.modes();
  const auto c = conjugation(lambda_symbol(alpha));
  const Eigen::Index dim = Eigen::Index{1} << n;
  std::vector<Matrix> f(n);
  double worst = 0.0;
  for (unsigned i = 1; i <= n; ++i) {
    const Matrix conj = c.backward * ladder(n, i, Ladder::annihilate).matrix() * c.forward;
    Matrix mixed = Matrix::Zero(dim, dim);
    for (unsigned j = 1; j <= n; ++j) {
      mixed += bp.U(i - 1, j - 1) * ladder(n, j, Ladder::annihilate).matrix() +
               bp.V(i - 1, j - 1) * ladder(n, j, Ladder::create).matrix();
    }
    worst = std::max(worst, (conj - mixed).cwiseAbs().maxCoeff());
    f[i - 1] = mixed;
  }
  anticommutator = 0.0;
  const Matrix id = Matrix::Identity(dim, dim);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      const Matrix fd = f[j].adjoint();
      const Matrix mixed = f[i] * fd + fd * f[i] - (i == j ? id : Matrix::Zero(dim, dim));
      const Matrix same = f[i] * f[j] + f[j] * f[i];
      anticommutator = std::max({anticommutator, mixed.cwiseAbs().maxCoeff(), same.cwiseAbs().maxCoeff()});
    }
  return worst;
}

void bogoliubov_checks(Report& r, const SuiteOptions& o) {
  Rng rng = stream(o, 50);
  double oracle = 0.0;
  double canonical = 0.0;
  double anti = 0.0;
  for (unsigned t = 0; t < o.trials; ++t) {
    const auto alpha = random_alpha(o.n, rng);
    const auto bp = bogoliubov_from_alpha(alpha);
    double a = 0.0;
    oracle = std::max(oracle, bogoliubov_oracle_residual(alpha, bp, a));
    anti = std::max(anti, a);
    canonical = std::max(canonical, bp.canonical_residual());
  }
  r.add(make_check("cov.bogoliubov.oracle", "e^-L f_i e^L = U_ij f_j + V_ij f+_j", oracle, kTransformTol));
  r.add(make_check("cov.bogoliubov.canonical", "U V^T + V U^T = 0, U U+ + V V+ = 1", canonical, kTransformTol));
  r.add(make_check("cov.bogoliubov.anticommutator", "{F_i, F+_j} = delta_ij, {F_i, F_j} = 0", anti,
                   kTransformTol));
}

void transform_checks(Report& r, const SuiteOptions& o) {
  const unsigned n = o.n;
  Rng rng = stream(o, 60);
  const unsigned trials = std::min(o.trials, 20u);
  double oracle = 0.0;
  double automorphism = 0.0;
  double via_exp = 0.0;
  double exp_inverse = 0.0;
  double bracket = 0.0;
  const auto one = GrassmannElement::scalar(n, 1.0);
  for (unsigned t = 0; t < trials; ++t) {
    const auto lambda = random_anti_hermitian_even(n, rng);
    const UnitaryTransform u(lambda);
    const auto c = conjugation(lambda);
    const auto a = random_element(n, rng);
    const auto b = random_element(n, rng);
    const auto ua = u.apply(a);
    oracle = std::max(oracle, relative(ua, symbol_of(FockOperator(n, c.backward * operator_of(a).matrix() * c.forward))));
    automorphism = std::max(automorphism, relative(u.apply(star(a, b)), star(ua, u.apply(b))));
    const auto e_plus = star_exp(lambda);
    const auto e_minus = star_exp(-lambda);
    via_exp = std::max(via_exp, relative(star(star(e_minus, a), e_plus), ua));
    exp_inverse = std::max(exp_inverse, max_abs_difference(star(e_minus, e_plus), one) /
                                             std::max(1.0, e_minus.max_abs() * e_plus.max_abs()));
    bracket = std::max(bracket, d_lambda_bracket_check(lambda, random_anti_hermitian_even(n, rng)));
  }
  r.add(make_check("cov.transform.oracle", "e^-D a = symbol(e^-L A e^L)", oracle, kTransformTol, "relative"));
  r.add(make_check("cov.transform.automorphism", "e^-D(a*b) = e^-D(a) * e^-D(b)", automorphism, kTransformTol,
                   "relative"));
  r.add(make_check("cov.star_exp.transform", "exp*(-l) * a * exp*(l) = e^-D a", via_exp, kTransformTol, "relative"));
  r.add(make_check("cov.star_exp.inverse", "exp*(-l) * exp*(l) = 1", exp_inverse, kTransformTol,
                   "relative to max |exp*(-l)| max |exp*(l)|"));
  r.add(make_check("cov.bracket", "[D_l1, D_l2] = D_[l1,l2]*", bracket, kOracleTol));
}

void covariance_checks(Report& r, const SuiteOptions& o) {
  const unsigned n = o.n;
  Rng rng = stream(o, 70);
  const unsigned trials = std::min(o.trials, 50u);
  double all = 0.0;
  double linear = 0.0;
  double involution_residual = 0.0;
  double tilde_relations = 0.0;
  double tilde_brackets = 0.0;
  double star_brackets = 0.0;
  double table = 0.0;
  std::string worst_monomial;
  for (unsigned t = 0; t < trials; ++t) {
    const auto alpha = random_alpha(n, rng);
    const auto lambda = lambda_symbol(alpha);
    const UnitaryTransform u(lambda);
    for (std::uint32_t k = 0; k < basis_size(n); ++k) {
      const auto res = check_covariance(u, basis(n, k)).residual;
      if (res > all) {
        all = res;
        worst_monomial = to_string(basis(n, k));
      }
      if (Monomial{k}.degree() <= 1) linear = std::max(linear, res);
    }
    const auto psi = psi_variables(lambda);
    for (unsigned i = 0; i < n; ++i)
      involution_residual = std::max(involution_residual, max_abs_difference(involution(psi.psi[i]), psi.psi_bar[i]));
    const auto ts = tilde_star_check(alpha);
    tilde_relations = std::max(tilde_relations, ts.relations_residual);
    tilde_brackets = std::max(tilde_brackets, ts.brackets_residual);
    star_brackets = std::max(star_brackets, ts.star_brackets_residual);
    table = std::max(table, ts.table_difference);
  }
  r.add(make_check("cov.covariance", "e^-D a = a(psi, psibar) for every basis monomial a", all, kTransformTol,
                   worst_monomial.empty() ? "" : "largest residual at a = " + worst_monomial));
  r.add(make_check("cov.covariance.linear", "e^-D a = a(psi, psibar) for a of degree <= 1", linear, kTransformTol));
  r.add(make_check("cov.psi.involution", "involution(psi_i) = psibar_i", involution_residual, kOracleTol));
  r.add(make_check("cov.tilde.relations", "psibar~psi = psibar psi, psi~psibar = psi psibar + delta",
                   tilde_relations, kTransformTol));
  r.add(make_check("cov.tilde.brackets", "{psibar_i, psi_j}~ = delta_ij, {psi_i, psi_j}~ = 0", tilde_brackets,
                   kTransformTol));
  r.add(make_check("cov.tilde.star_brackets", "{psibar_i, psi_j}* = delta_ij, {psi_i, psi_j}* = 0", star_brackets,
                   kTransformTol));
  r.add(make_info("cov.tilde.table_difference", "max |w~ - w| between the two contraction tables", table));

  const auto w = check_covariance(witness_lambda(), witness_argument());
  Check witness = make_check("cov.witness", "quartic l = i tb1 t1 tb2 t2, a = t1 violates covariance", w.residual,
                             1e-3, "passes when the residual exceeds the tolerance");
  witness.pass = std::isfinite(w.residual) && w.residual > 1e-3;
  r.add(witness);
}

}  // namespace

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names{"fermionic", "covariance", "oscillator",
                                                   "fermion-oscillator", "susy", "all"};
  return names;
}

GrassmannElement witness_lambda() {
  return GrassmannElement::product_of(2, {theta_bar(1), theta(1), theta_bar(2), theta(2)}, Complex(0.0, 1.0));
}

GrassmannElement witness_argument() { return GrassmannElement::generator(2, theta(1)); }

OracleComparison oracle_compare(unsigned n, unsigned trials, std::uint64_t seed, StarKind kind) {
  if (n < 1 || n > kMaxOracleModes) {
    throw UsageError("oracle-compare: --n must lie in 1.." + std::to_string(kMaxOracleModes));
  }
  if (!(kind.hbar >= 0.0) || !std::isfinite(kind.hbar)) throw UsageError("--hbar must be a finite value >= 0");
  OracleComparison out;
  out.n = n;
  out.trials = trials;
  Rng rng(seed);
  for (unsigned t = 0; t < trials; ++t) {
    const auto a = random_element(n, rng);
    const auto b = random_element(n, rng);
    out.max_residual = std::max(out.max_residual, max_abs_difference(star(a, b, kind), reference_product(a, b, kind)));
  }
  out.pass = std::isfinite(out.max_residual) && out.max_residual < kOracleTol;
  return out;
}

Report fermionic_suite(const SuiteOptions& o) {
  require_modes(o, "fermionic");
  Report r{"fermionic", {}};
  minimal_relations(r, o);
  oracle_checks(r, o);
  associativity(r, o);
  structural(r, o);
  equivalence(r, o);
  overlap(r, o);
  r.finalize();
  return r;
}

Report covariance_suite(const SuiteOptions& o) {
  require_modes(o, "covariance");
  Report r{"covariance", {}};
  bogoliubov_checks(r, o);
  transform_checks(r, o);
  covariance_checks(r, o);
  r.finalize();
  return r;
}

Report oscillator_suite(const SuiteOptions&) {
  Report r{"oscillator", {}};
  r.append(ladder_relations_check());
  r.append(generating_derivative_check());
  r.append(su2_star_check());
  r.finalize();
  return r;
}

Report susy_suite(const SuiteOptions& o) {
  if (o.cutoff < 2 || o.cutoff > 40) throw UsageError("susy suite: --cutoff must lie in 2..40");
  if (o.trials < 1) throw UsageError("--trials must be positive");
  Report r{"susy", {}};
  const unsigned trials = std::min(o.trials, 50u);
  r.append(boson_relations_check(o.cutoff, trials, o.seed));
  r.append(susy_check(o.cutoff, trials, o.seed));
  r.finalize();
  return r;
}

Report run_suite(std::string_view name, const SuiteOptions& options) {
  if (name == "fermionic") return fermionic_suite(options);
  if (name == "covariance") return covariance_suite(options);
  if (name == "oscillator" || name == "fermion-oscillator") return oscillator_suite(options);
  if (name == "susy") return susy_suite(options);
  if (name == "all") {
    Report r{"all", {}};
    r.append(fermionic_suite(options));
    r.append(covariance_suite(options));
    r.append(oscillator_suite(options));
    r.append(susy_suite(options));
    r.finalize();
    return r;
  }
  throw UsageError("unknown suite '" + std::string(name) + "'");
}

}  // namespace gstar
