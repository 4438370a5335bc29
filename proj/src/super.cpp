#include "gstar/super.hpp"

#include <optional>

#include <unsupported/Eigen/KroneckerProduct>

#include "gstar/oscillator.hpp"
#include "gstar/sampling.hpp"
#include "gstar/star.hpp"

namespace gstar {

namespace {

struct FermionTerm {
  unsigned mask;
  double coeff;
};

using ProductTable = std::array<std::array<std::vector<FermionTerm>, 4>, 4>;

ProductTable build_table(bool star_product) {
  ProductTable t;
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = 0; b < 4; ++b) {
      const auto x = GrassmannElement::monomial(1, Monomial{a});
      const auto y = GrassmannElement::monomial(1, Monomial{b});
      const auto p = star_product ? star(x, y) : multiply(x, y);
      for (const auto& [m, c] : p.terms()) t[a][b].push_back({m.mask(), c.real()});
    }
  return t;
}

const ProductTable& star_table() {
  static const ProductTable t = build_table(true);
  return t;
}

const ProductTable& pointwise_table() {
  static const ProductTable t = build_table(false);
  return t;
}

template <class B, class Product>
SuperComponents<B> combine(const SuperComponents<B>& a, const SuperComponents<B>& b, const ProductTable& table,
                           SuperComponents<B> out, Product product) {
  for (unsigned fa = 0; fa < 4; ++fa)
    for (unsigned fb = 0; fb < 4; ++fb)
      for (const auto& term : table[fa][fb]) out[term.mask] += product(a[fa], b[fb]) * Complex(term.coeff);
  return out;
}

SuperFock zero_fock(unsigned cutoff) {
  return SuperFock{{FockSymbol::zero(cutoff), FockSymbol::zero(cutoff), FockSymbol::zero(cutoff),
                    FockSymbol::zero(cutoff)}};
}

unsigned cutoff_of(const SuperFock& a) { return a[0].cutoff(); }

// sign picked up by the fermionic monomial under involution (1, θ̄, θ fixed; θ̄θ → θ̄θ)
std::pair<unsigned, double> involute(unsigned f) {
  const auto e = involution(GrassmannElement::monomial(1, Monomial{f}));
  const auto& [m, c] = *e.terms().begin();
  return {m.mask(), c.real()};
}

}  // namespace

SuperPolynomial super_from(const BosonPolynomial& bosonic, const GrassmannElement& fermionic) {
  if (fermionic.modes() != 1) throw DimensionError("super symbols carry exactly one fermionic mode");
  SuperPolynomial s;
  for (const auto& [m, c] : fermionic.terms()) s[m.mask()] += bosonic * c;
  return s;
}

SuperFock super_from(const FockSymbol& bosonic, const GrassmannElement& fermionic) {
  if (fermionic.modes() != 1) throw DimensionError("super symbols carry exactly one fermionic mode");
  SuperFock s = zero_fock(bosonic.cutoff());
  for (const auto& [m, c] : fermionic.terms()) s[m.mask()] += bosonic * c;
  return s;
}

SuperFock to_fock(const SuperPolynomial& p, unsigned cutoff) {
  SuperFock s = zero_fock(cutoff);
  for (unsigned f = 0; f < 4; ++f) s[f] = FockSymbol::from_polynomial(p[f], cutoff);
  return s;
}

SuperPolynomial operator+(const SuperPolynomial& a, const SuperPolynomial& b) {
  SuperPolynomial r = a;
  for (unsigned f = 0; f < 4; ++f) r[f] += b[f];
  return r;
}

SuperPolynomial operator-(const SuperPolynomial& a, const SuperPolynomial& b) {
  SuperPolynomial r = a;
  for (unsigned f = 0; f < 4; ++f) r[f] -= b[f];
  return r;
}

SuperPolynomial operator*(const SuperPolynomial& a, Complex c) {
  SuperPolynomial r = a;
  for (unsigned f = 0; f < 4; ++f) r[f] *= c;
  return r;
}

SuperFock operator+(const SuperFock& a, const SuperFock& b) {
  SuperFock r = a;
  for (unsigned f = 0; f < 4; ++f) r[f] += b[f];
  return r;
}

SuperFock operator-(const SuperFock& a, const SuperFock& b) {
  SuperFock r = a;
  for (unsigned f = 0; f < 4; ++f) r[f] -= b[f];
  return r;
}

SuperFock operator*(const SuperFock& a, Complex c) {
  SuperFock r = a;
  for (unsigned f = 0; f < 4; ++f) r[f] *= c;
  return r;
}

SuperPolynomial multiply(const SuperPolynomial& a, const SuperPolynomial& b) {
  return combine(a, b, pointwise_table(), SuperPolynomial{},
                 [](const BosonPolynomial& x, const BosonPolynomial& y) { return multiply(x, y); });
}

SuperPolynomial super_star(const SuperPolynomial& a, const SuperPolynomial& b) {
  return combine(a, b, star_table(), SuperPolynomial{},
                 [](const BosonPolynomial& x, const BosonPolynomial& y) { return voros_star_poly(x, y); });
}

SuperFock super_star(const SuperFock& a, const SuperFock& b) {
  if (cutoff_of(a) != cutoff_of(b)) throw DimensionError("super_star: cutoff mismatch");
  return combine(a, b, star_table(), zero_fock(cutoff_of(a)),
                 [](const FockSymbol& x, const FockSymbol& y) { return fock_star(x, y); });
}

SuperSymbol super_star(const SuperSymbol& a, const SuperSymbol& b) {
  if (a.index() != b.index()) throw DomainError("super_star: operands use different bosonic representations");
  if (const auto* p = std::get_if<SuperPolynomial>(&a)) return super_star(*p, std::get<SuperPolynomial>(b));
  return super_star(std::get<SuperFock>(a), std::get<SuperFock>(b));
}

SuperPolynomial involution(const SuperPolynomial& a) {
  SuperPolynomial r;
  for (unsigned f = 0; f < 4; ++f) {
    const auto [g, sign] = involute(f);
    r[g] += involution(a[f]) * sign;
  }
  return r;
}

SuperFock involution(const SuperFock& a) {
  SuperFock r = zero_fock(cutoff_of(a));
  for (unsigned f = 0; f < 4; ++f) {
    const auto [g, sign] = involute(f);
    r[g] += a[f].adjoint() * sign;
  }
  return r;
}

double max_abs_difference(const SuperPolynomial& a, const SuperPolynomial& b) {
  double m = 0.0;
  for (unsigned f = 0; f < 4; ++f) m = std::max(m, max_abs_difference(a[f], b[f]));
  return m;
}

double max_exact_difference(const SuperFock& a, const SuperFock& b) {
  double m = 0.0;
  for (unsigned f = 0; f < 4; ++f) m = std::max(m, max_exact_difference(a[f], b[f]));
  return m;
}

std::string to_string(const SuperPolynomial& a) {
  std::vector<std::pair<Complex, std::string>> terms;
  for (unsigned f = 0; f < 4; ++f) {
    const std::string fermion = monomial_tokens(Monomial{f}, 1);
    for (const auto& [k, c] : a[f].terms()) {
      std::string mono;
      for (unsigned i = 0; i < k.first; ++i) mono += mono.empty() ? "z" : " z";
      for (unsigned i = 0; i < k.second; ++i) mono += mono.empty() ? "zb" : " zb";
      if (!fermion.empty()) mono += mono.empty() ? fermion : " " + fermion;
      terms.emplace_back(c, mono);
    }
  }
  return format_linear_combination(terms);
}

std::string to_string(const SuperFock& a) { return to_json(SuperSymbol{a}).dump(); }

std::string to_string(const SuperSymbol& a) {
  return std::visit([](const auto& s) { return to_string(s); }, a);
}

nlohmann::json to_json(const SuperSymbol& a) {
  nlohmann::json comps = nlohmann::json::array();
  if (const auto* p = std::get_if<SuperPolynomial>(&a)) {
    for (unsigned f = 0; f < 4; ++f) {
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& [k, c] : (*p)[f].terms())
        terms.push_back({{"z", k.first}, {"zb", k.second}, {"re", c.real()}, {"im", c.imag()}});
      comps.push_back({{"fermion", monomial_tokens(Monomial{f}, 1)}, {"terms", terms}});
    }
    return {{"representation", "polynomial"}, {"components", comps}, {"text", to_string(*p)}};
  }
  const auto& s = std::get<SuperFock>(a);
  for (unsigned f = 0; f < 4; ++f) comps.push_back({{"fermion", monomial_tokens(Monomial{f}, 1)}, {"symbol", to_json(s[f])}});
  return {{"representation", "fock"}, {"components", comps}};
}

SuperSymbol super_symbol_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("representation") || !j.contains("components")) {
    throw DomainError("super symbol JSON needs \"representation\" and \"components\"");
  }
  const auto rep = j.at("representation").get<std::string>();
  const auto& comps = j.at("components");
  if (!comps.is_array() || comps.size() != 4) throw DimensionError("super symbol JSON: four components expected");
  auto slot = [](const nlohmann::json& c) {
    const auto [m, sign] = parse_monomial_tokens(c.value("fermion", std::string{}), 1);
    if (sign != 1.0) throw DomainError("super symbol JSON: fermion monomials must be canonical");
    return m.mask();
  };
  if (rep == "polynomial") {
    SuperPolynomial p;
    for (const auto& c : comps) {
      const unsigned f = slot(c);
      for (const auto& t : c.at("terms")) {
        p[f].add_term(t.at("z").get<unsigned>(), t.at("zb").get<unsigned>(),
                      Complex(t.value("re", 0.0), t.value("im", 0.0)));
      }
    }
    return p;
  }
  if (rep == "fock") {
    std::array<std::optional<FockSymbol>, 4> parts;
    for (const auto& c : comps) parts.at(slot(c)) = fock_symbol_from_json(c.at("symbol"));
    for (const auto& part : parts) {
      if (!part || part->cutoff() != parts[0]->cutoff()) {
        throw DimensionError("super symbol JSON: components need one common cutoff");
      }
    }
    return SuperFock{{*parts[0], *parts[1], *parts[2], *parts[3]}};
  }
  throw DomainError("super symbol JSON: unknown representation '" + rep + "'");
}

SuperchargeSymbols supercharge_symbols() {
  const auto tb = GrassmannElement::generator(1, theta_bar(1));
  const auto t = GrassmannElement::generator(1, theta(1));
  SuperchargeSymbols s;
  s.h = super_from(BosonPolynomial::monomial(1, 1), GrassmannElement::scalar(1, 1.0)) +
        super_from(BosonPolynomial::constant(1.0), multiply(tb, t));
  s.q_minus = super_from(BosonPolynomial::z(), tb);
  s.q_plus = super_from(BosonPolynomial::zbar(), t);
  return s;
}

Matrix super_operator(const SuperFock& a) {
  const Eigen::Index dim = 2 * (cutoff_of(a) + 1);
  Matrix op = Matrix::Zero(dim, dim);
  for (unsigned f = 0; f < 4; ++f) {
    const Matrix fermion = operator_of(GrassmannElement::monomial(1, Monomial{f})).matrix();
    op += Matrix(Eigen::kroneckerProduct(a[f].matrix(), fermion));
  }
  return op;
}

SuperFock super_symbol_of(unsigned cutoff, const Matrix& op) {
  const Eigen::Index n = cutoff + 1;
  if (op.rows() != 2 * n || op.cols() != 2 * n) throw DimensionError("super operator has the wrong size");
  const auto block = [&](int s, int t) {
    return Matrix(op(Eigen::seqN(s, n, 2), Eigen::seqN(t, n, 2)));
  };
  SuperFock r = zero_fock(cutoff);
  r[0] = FockSymbol(cutoff, block(0, 0));
  r[1] = FockSymbol(cutoff, block(1, 0));  // f⁺ = |1⟩⟨0|
  r[2] = FockSymbol(cutoff, block(0, 1));  // f⁻ = |0⟩⟨1|
  r[3] = FockSymbol(cutoff, block(1, 1) - block(0, 0));
  return r;
}

Report susy_check(unsigned cutoff, unsigned trials, std::uint64_t seed) {
  if (cutoff < 2) throw DomainError("susy checks need a cutoff of at least 2");
  Report r;
  r.suite = "susy";
  const auto [h, qm, qp] = supercharge_symbols();
  const auto hf = to_fock(h, cutoff);
  const auto qmf = to_fock(qm, cutoff);
  const auto qpf = to_fock(qp, cutoff);
  const SuperPolynomial zero_p;
  const SuperFock zero_f = zero_fock(cutoff);

  // Polynomial symbols are exact. The truncated Fock matrices carry √n entries,
  // so their products agree only up to rounding.
  constexpr double fock_tol = 1e-12;
  r.add(make_check("susy.anticommutator", "q- ⋆ q+ + q+ ⋆ q- = h = z̄z + θ̄θ",
                   max_abs_difference(super_star(qm, qp) + super_star(qp, qm), h), 0.0));
  r.add(make_check("susy.anticommutator.fock", "q- ⋆ q+ + q+ ⋆ q- = h below the cutoff",
                   max_exact_difference(super_star(qmf, qpf) + super_star(qpf, qmf), hf), fock_tol));
  r.add(make_check("susy.nilpotent", "q+ ⋆ q+ = q- ⋆ q- = 0",
                   std::max(max_abs_difference(super_star(qp, qp), zero_p), max_abs_difference(super_star(qm, qm), zero_p)),
                   0.0));
  r.add(make_check("susy.nilpotent.fock", "q+ ⋆ q+ = q- ⋆ q- = 0 below the cutoff",
                   std::max(max_exact_difference(super_star(qpf, qpf), zero_f),
                            max_exact_difference(super_star(qmf, qmf), zero_f)),
                   fock_tol));
  r.add(make_check("susy.commutator", "q± ⋆ h = h ⋆ q±",
                   std::max(max_abs_difference(super_star(qp, h), super_star(h, qp)),
                            max_abs_difference(super_star(qm, h), super_star(h, qm))),
                   0.0));
  r.add(make_check("susy.commutator.fock", "q± ⋆ h = h ⋆ q± below the cutoff",
                   std::max(max_exact_difference(super_star(qpf, hf), super_star(hf, qpf)),
                            max_exact_difference(super_star(qmf, hf), super_star(hf, qmf))),
                   fock_tol));
  r.add(make_check("susy.involution", "involution(q-) = q+, involution(h) = h",
                   std::max(max_abs_difference(involution(qm), qp), max_abs_difference(involution(h), h)), 0.0));

  {
    // Q- = b⁺f⁻ and Q+ = b⁻f⁺ taken as operators
    const Matrix bp = FockSymbol::from_polynomial(BosonPolynomial::zbar(), cutoff).matrix();
    const Matrix bm = FockSymbol::from_polynomial(BosonPolynomial::z(), cutoff).matrix();
    const Matrix fp = ladder(1, 1, Ladder::create).matrix();
    const Matrix fm = ladder(1, 1, Ladder::annihilate).matrix();
    const auto sym_qm = super_symbol_of(cutoff, Eigen::kroneckerProduct(bp, fm));
    const auto sym_qp = super_symbol_of(cutoff, Eigen::kroneckerProduct(bm, fp));
    r.add(make_info("susy.charges.labels", "symbol of b⁺f⁻ = zθ̄ and of b⁻f⁺ = z̄θ",
                    std::max(max_exact_difference(sym_qm, qmf), max_exact_difference(sym_qp, qpf)),
                    "the symbol of b⁺f⁻ is z̄θ and that of b⁻f⁺ is zθ̄; the sl(1/1) relations are symmetric under the exchange"));
    const Matrix hop = Eigen::kroneckerProduct(Matrix(bp * bm), Matrix::Identity(2, 2)) +
                       Eigen::kroneckerProduct(Matrix::Identity(cutoff + 1, cutoff + 1), Matrix(fp * fm));
    r.add(make_check("susy.hamiltonian.oracle", "h = symbol of b⁺b⁻ + f⁺f⁻",
                     max_exact_difference(super_symbol_of(cutoff, hop), hf), fock_tol));
  }

  {
    double eig = 0.0;
    std::vector<unsigned> multiplicity(cutoff + 2, 0);
    for (unsigned n = 0; n <= cutoff; ++n)
      for (unsigned s = 0; s <= 1; ++s) {
        const auto p = super_from(FockSymbol::basis(cutoff, n, n), projector_symbol(s, s));
        const auto hp = super_star(hf, p);
        if (hp[0].exact_through() < static_cast<int>(n)) continue;
        eig = std::max(eig, max_exact_difference(hp, p * Complex(n + s)));
        ++multiplicity[n + s];
      }
    bool doubled = multiplicity[0] == 1;
    for (unsigned e = 1; e + 1 < multiplicity.size() && e < cutoff; ++e) doubled = doubled && multiplicity[e] == 2;
    r.add(make_check("susy.spectrum", "h ⋆ (Φnn Pss) = (n + s) Φnn Pss", eig, 0.0));
    r.add(make_check("susy.degeneracy", "levels e ≥ 1 below the cutoff are doubly degenerate, e = 0 is single",
                     doubled ? 0.0 : 1.0, 0.0));
  }

  Rng rng(seed);
  double oracle = 0.0, assoc_p = 0.0, assoc_f = 0.0;
  for (unsigned t = 0; t < trials; ++t) {
    SuperPolynomial a, b, c;
    for (unsigned f = 0; f < 4; ++f) {
      a[f] = random_polynomial(2, rng);
      b[f] = random_polynomial(2, rng);
      c[f] = random_polynomial(2, rng);
    }
    const auto af = to_fock(a, cutoff), bf = to_fock(b, cutoff), cf = to_fock(c, cutoff);
    const auto abf = super_star(af, bf);
    oracle = std::max(oracle, max_exact_difference(abf, super_symbol_of(cutoff, super_operator(af) * super_operator(bf))));
    oracle = std::max(oracle, max_exact_difference(abf, to_fock(super_star(a, b), cutoff)));
    const auto lhs = super_star(super_star(a, b), c);
    double scale = 1.0;
    for (unsigned f = 0; f < 4; ++f) scale = std::max(scale, lhs[f].max_abs());
    assoc_p = std::max(assoc_p, max_abs_difference(lhs, super_star(a, super_star(b, c))) / scale);
    assoc_f = std::max(assoc_f, max_exact_difference(super_star(abf, cf), super_star(af, super_star(bf, cf))) / scale);
  }
  r.add(make_check("susy.oracle", "⋆_susy = symbol of the tensor-product operator product", oracle, 1e-10));
  r.add(make_check("susy.associativity", "(a ⋆ b) ⋆ c = a ⋆ (b ⋆ c), relative, below cutoff",
                   std::max(assoc_p, assoc_f), 1e-12));
  r.finalize();
  return r;
}

}  // namespace gstar
