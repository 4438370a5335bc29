#include "gstar/oscillator.hpp"

#include "gstar/fock.hpp"

namespace gstar {

namespace {

constexpr StarKind kSym{ProductKind::symmetric, 1.0};

GrassmannElement gen(GeneratorIndex g) { return GrassmannElement::generator(1, g); }
GrassmannElement num(Complex c) { return GrassmannElement::scalar(1, c); }

void require_occupation(unsigned m, unsigned n) {
  if (m > 1 || n > 1) throw DomainError("occupation numbers must be 0 or 1");
}

}  // namespace

GrassmannElement projector_symbol(unsigned m, unsigned n) {
  require_occupation(m, n);
  const auto bra = coherent_bra(1, 1);
  const auto ket = coherent_ket(1, 1);
  return multiply(bra[m], ket[n]);
}

GrassmannElement hamiltonian_symbol() {
  return symbol_of(ladder(1, 1, Ladder::create) * ladder(1, 1, Ladder::annihilate)).pruned(0.0);
}

Report ladder_relations_check() {
  Report r;
  r.suite = "oscillator";
  const auto t = gen(theta(1));
  const auto tb = gen(theta_bar(1));
  const auto h = hamiltonian_symbol();
  const auto P = [](int m, int n) {
    if (m < 0 || m > 1 || n < 0 || n > 1) return GrassmannElement(1);
    return projector_symbol(static_cast<unsigned>(m), static_cast<unsigned>(n));
  };

  r.add(make_check("osc.hamiltonian", "h = <θ|f⁺f⁻|θ> = θ̄θ", max_abs_difference(h, multiply(tb, t)), 0.0));
  r.add(make_check("osc.vacuum", "θ ⋆ P00 = P00 ⋆ θ̄ = 0",
                   std::max(star(t, P(0, 0)).max_abs(), star(P(0, 0), tb).max_abs()), 0.0));
  r.add(make_check("osc.completion", "P00 + P11 = 1", max_abs_difference(P(0, 0) + P(1, 1), num(1.0)), 0.0));

  double eig_l = 0, eig_r = 0, low_l = 0, up_r = 0, up_l = 0, low_r = 0, prod = 0, oracle = 0;
  for (int m = 0; m <= 1; ++m) {
    for (int n = 0; n <= 1; ++n) {
      const auto p = P(m, n);
      eig_l = std::max(eig_l, max_abs_difference(star(h, p), p * Complex(m)));
      eig_r = std::max(eig_r, max_abs_difference(star(p, h), p * Complex(n)));
      low_l = std::max(low_l, max_abs_difference(star(t, p), P(m - 1, n)));
      up_r = std::max(up_r, max_abs_difference(star(p, t), P(m, n + 1)));
      up_l = std::max(up_l, max_abs_difference(star(tb, p), P(m + 1, n)));
      low_r = std::max(low_r, max_abs_difference(star(p, tb), P(m, n - 1)));

      Matrix op = Matrix::Zero(2, 2);
      op(m, n) = 1.0;
      oracle = std::max(oracle, max_abs_difference(p, symbol_of(FockOperator(1, op))));
      for (int m2 = 0; m2 <= 1; ++m2)
        for (int n2 = 0; n2 <= 1; ++n2) {
          const auto expected = n == m2 ? P(m, n2) : GrassmannElement(1);
          prod = std::max(prod, max_abs_difference(star(p, P(m2, n2)), expected));
        }
    }
  }
  r.add(make_check("osc.eigen.left", "h ⋆ Pmn = e_m Pmn", eig_l, 0.0));
  r.add(make_check("osc.eigen.right", "Pmn ⋆ h = e_n Pmn", eig_r, 0.0));
  r.add(make_check("osc.ladder.theta_left", "θ ⋆ Pmn = P(m-1)n (1 - δ_m0)", low_l, 0.0));
  r.add(make_check("osc.ladder.theta_right", "Pmn ⋆ θ = Pm(n+1) (1 - δ_n1)", up_r, 0.0));
  r.add(make_check("osc.ladder.thetabar_left", "θ̄ ⋆ Pmn = P(m+1)n (1 - δ_m1)", up_l, 0.0));
  r.add(make_check("osc.ladder.thetabar_right", "Pmn ⋆ θ̄ = Pm(n-1) (1 - δ_n0)", low_r, 0.0));
  r.add(make_check("osc.projector.product", "Pmn ⋆ Pm'n' = δ_nm' Pmn'", prod, 0.0));
  r.add(make_check("osc.projector.oracle", "Pmn = symbol of |m><n|", oracle, 1e-12));
  r.finalize();
  return r;
}

std::vector<GrassmannElement> oscillator_exponential() {
  const unsigned gm = kGeneratingModes;
  GrassmannOperator x(1, gm);
  x.at(1, 0) = GrassmannElement::generator(gm, theta(1));
  x.at(0, 1) = GrassmannElement::generator(gm, theta_bar(1));
  const auto e = exp_nilpotent(x);
  return {e.at(0, 0), e.at(0, 1), e.at(1, 0), e.at(1, 1)};
}

GrassmannElement generating_function() {
  const unsigned gm = kGeneratingModes;
  const auto e = oscillator_exponential();
  const auto a = GrassmannElement::generator(gm, kAlpha);
  const auto b = GrassmannElement::generator(gm, kBeta);
  const auto one = GrassmannElement::scalar(gm, 1.0);
  GrassmannElement phi(gm);
  for (unsigned n = 0; n <= 1; ++n)
    for (unsigned m = 0; m <= 1; ++m) phi += multiply(multiply(n ? a : one, m ? b : one), e[2 * n + m]);
  return phi;
}

GrassmannElement generating_function_closed_form() {
  const unsigned gm = kGeneratingModes;
  const auto tb = GrassmannElement::generator(gm, theta_bar(1));
  const auto t = GrassmannElement::generator(gm, theta(1));
  const auto a = GrassmannElement::generator(gm, kAlpha);
  const auto b = GrassmannElement::generator(gm, kBeta);
  const auto x = multiply(tb, t) + multiply(a, t) + multiply(b, tb) + multiply(a, b);
  return exp_nilpotent(x * Complex(-0.5));
}

GrassmannElement generating_coefficient(const GrassmannElement& phi, unsigned n, unsigned m) {
  require_occupation(m, n);
  if (phi.modes() != kGeneratingModes) throw DimensionError("generating function lives in the two-mode algebra");
  GrassmannElement d = phi;
  if (n) d = left_derivative(kAlpha, d);
  if (m) d = left_derivative(kBeta, d);
  GrassmannElement out(1);
  const unsigned ab_slots = (1u << slot_of(kAlpha, kGeneratingModes)) | (1u << slot_of(kBeta, kGeneratingModes));
  for (const auto& [mono, c] : d.terms()) {
    if (mono.mask() & ab_slots) continue;
    // θ̄ sits in slot 0 and θ in slot 2 of the enlarged algebra
    const std::uint32_t mask = (mono.contains(0) ? 1u : 0u) | (mono.contains(2) ? 2u : 0u);
    out.add_term(Monomial{mask}, c);
  }
  return out;
}

Report generating_derivative_check() {
  Report r;
  r.suite = "oscillator";
  const auto phi = generating_function();
  const auto e = oscillator_exponential();
  double extract = 0.0;
  for (unsigned n = 0; n <= 1; ++n)
    for (unsigned m = 0; m <= 1; ++m) {
      // entries only involve θ, θ̄; the projection just drops to the one-mode algebra
      const auto entry = generating_coefficient(e[2 * n + m], 0, 0);
      extract = std::max(extract, max_abs_difference(generating_coefficient(phi, n, m), entry));
    }
  r.add(make_check("gen.extraction", "∂_β^m ∂_α^n Φ at α=β=0 = <n|exp(θf⁺ + θ̄f⁻)|m>", extract, 0.0));

  const auto tb = GrassmannElement::generator(1, theta_bar(1));
  const auto t = GrassmannElement::generator(1, theta(1));
  const auto vac = GrassmannElement::scalar(1, 1.0) - multiply(tb, t) * Complex(0.5);
  r.add(make_check("gen.vacuum", "Φ at α=β=0 = 1 - ½θ̄θ", max_abs_difference(generating_coefficient(phi, 0, 0), vac),
                   0.0));

  r.add(make_info("gen.closed_form", "Φ = exp(-½(θ̄θ + αθ + βθ̄ + αβ))",
                  max_abs_difference(phi, generating_function_closed_form()),
                  "closed form differs from the matrix-element sum; e.g. the αθ coefficient is 1, not -½"));

  double printed = 0.0;
  for (unsigned n = 0; n <= 1; ++n)
    for (unsigned m = 0; m <= 1; ++m)
      printed = std::max(printed, max_abs_difference(generating_coefficient(phi, n, m),
                                                     star(projector_symbol(m, n), tb)));
  r.add(make_info("gen.projector_relation", "Φ derivatives = Pmn ⋆ θ̄", printed,
                  "derivative coefficients compared with Pmn ⋆ θ̄ for all m, n"));
  r.finalize();
  return r;
}

GrassmannElement su2_casimir(const GrassmannElement& j3) {
  const auto jp = GrassmannElement::generator(1, theta_bar(1));
  const auto jm = GrassmannElement::generator(1, theta(1));
  return (star(jm, jp, kSym) + star(jp, jm, kSym)) * Complex(0.5) + star(j3, j3, kSym);
}

namespace {

double su2_bracket_residual(const GrassmannElement& j3) {
  const auto jp = GrassmannElement::generator(1, theta_bar(1));
  const auto jm = GrassmannElement::generator(1, theta(1));
  double r = max_abs_difference(star_commutator(jm, jp, kSym), j3 * Complex(2.0));
  r = std::max(r, max_abs_difference(star_commutator(jp, j3, kSym), jp));
  r = std::max(r, max_abs_difference(star_commutator(jm, j3, kSym), -jm));
  return r;
}

}  // namespace

Report su2_star_check() {
  Report r;
  r.suite = "oscillator";
  const auto jp = GrassmannElement::generator(1, theta_bar(1));
  const auto jm = GrassmannElement::generator(1, theta(1));
  const auto p11 = projector_symbol(1, 1);
  const auto quarter = GrassmannElement::scalar(1, 0.25);

  struct Candidate {
    const char* name;
    GrassmannElement j3;
  };
  const Candidate candidates[] = {
      {"p11", p11},
      {"p11_traceless", p11 - GrassmannElement::scalar(1, 0.5)},
  };
  for (const auto& c : candidates) {
    const std::string id = std::string("su2.candidate.") + c.name;
    r.add(make_info(id + ".brackets", "[j-, j+] = 2 j3, [j±, j3] = ±j± with j3 = " + to_string(c.j3),
                    su2_bracket_residual(c.j3)));
    r.add(make_info(id + ".casimir", "C = ¼ with j3 = " + to_string(c.j3),
                    max_abs_difference(su2_casimir(c.j3), quarter), "C = " + to_string(su2_casimir(c.j3))));
  }

  // the only j3 compatible with [j-, j+] = 2 j3
  const auto j3 = star_commutator(jm, jp, kSym) * Complex(0.5);
  r.add(make_check("su2.brackets", "[j-, j+] = 2 j3, [j±, j3] = ±j±", su2_bracket_residual(j3), 0.0,
                   "j3 = ½[j-, j+] = " + to_string(j3)));
  const auto c = su2_casimir(j3);
  r.add(make_check("su2.casimir", "C = ½(j-⋆̂j+ + j+⋆̂j-) + j3⋆̂j3 = ¼", max_abs_difference(c, quarter), 0.0,
                   "C = " + to_string(c)));
  r.add(make_check("su2.casimir_central", "[C, j±] = [C, j3] = 0",
                   std::max({star_commutator(c, jp, kSym).max_abs(), star_commutator(c, jm, kSym).max_abs(),
                             star_commutator(c, j3, kSym).max_abs()}),
                   0.0));
  r.finalize();
  return r;
}

}  // namespace gstar
