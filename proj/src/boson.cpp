#include "gstar/boson.hpp"

#include <cmath>

#include "gstar/sampling.hpp"

namespace gstar {

BosonPolynomial BosonPolynomial::constant(Complex c) { return monomial(0, 0, c); }

BosonPolynomial BosonPolynomial::monomial(unsigned a, unsigned b, Complex c) {
  BosonPolynomial p;
  p.add_term(a, b, c);
  return p;
}

Complex BosonPolynomial::coefficient(unsigned a, unsigned b) const {
  const auto it = terms_.find({a, b});
  return it == terms_.end() ? Complex{} : it->second;
}

void BosonPolynomial::add_term(unsigned a, unsigned b, Complex c) {
  if (c == Complex{}) return;
  auto [it, inserted] = terms_.try_emplace({a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex{}) terms_.erase(it);
  }
}

unsigned BosonPolynomial::degree() const {
  unsigned d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
  return d;
}

double BosonPolynomial::max_abs() const {
  double m = 0.0;
  for (const auto& [k, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

Complex BosonPolynomial::evaluate(Complex z) const {
  Complex s{};
  for (const auto& [k, c] : terms_) s += c * std::pow(z, k.first) * std::pow(std::conj(z), k.second);
  return s;
}

BosonPolynomial& BosonPolynomial::operator+=(const BosonPolynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

BosonPolynomial& BosonPolynomial::operator-=(const BosonPolynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

BosonPolynomial& BosonPolynomial::operator*=(Complex c) {
  if (c == Complex{}) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

BosonPolynomial multiply(const BosonPolynomial& p, const BosonPolynomial& q) {
  BosonPolynomial r;
  for (const auto& [kp, cp] : p.terms())
    for (const auto& [kq, cq] : q.terms()) r.add_term(kp.first + kq.first, kp.second + kq.second, cp * cq);
  return r;
}

namespace {

// x! / (x - r)!
double falling(unsigned x, unsigned r) {
  double f = 1.0;
  for (unsigned i = 0; i < r; ++i) f *= static_cast<double>(x - i);
  return f;
}

}  // namespace

BosonPolynomial voros_star_poly(const BosonPolynomial& p, const BosonPolynomial& q) {
  BosonPolynomial r;
  for (const auto& [kp, cp] : p.terms()) {
    const auto [a, b] = kp;
    for (const auto& [kq, cq] : q.terms()) {
      const auto [c, d] = kq;
      double inv_fact = 1.0;
      for (unsigned k = 0; k <= std::min(a, d); ++k) {
        if (k > 0) inv_fact /= k;
        const double w = inv_fact * falling(a, k) * falling(d, k);
        r.add_term(a - k + c, b + d - k, cp * cq * w);
      }
    }
  }
  return r;
}

BosonPolynomial involution(const BosonPolynomial& p) {
  BosonPolynomial r;
  for (const auto& [k, c] : p.terms()) r.add_term(k.second, k.first, std::conj(c));
  return r;
}

double max_abs_difference(const BosonPolynomial& p, const BosonPolynomial& q) {
  return (p - q).max_abs();
}

std::string to_string(const BosonPolynomial& p) {
  std::vector<std::pair<Complex, std::string>> terms;
  for (const auto& [k, c] : p.terms()) {
    std::string mono;
    for (unsigned i = 0; i < k.first; ++i) mono += mono.empty() ? "z" : " z";
    for (unsigned i = 0; i < k.second; ++i) mono += mono.empty() ? "zb" : " zb";
    terms.emplace_back(c, mono);
  }
  return format_linear_combination(terms);
}

FockSymbol::FockSymbol(unsigned cutoff, Eigen::MatrixXcd c)
    : cutoff_(cutoff), c_(std::move(c)), exact_(static_cast<int>(cutoff)) {
  if (c_.rows() != cutoff + 1 || c_.cols() != cutoff + 1) {
    throw DimensionError("Fock symbol matrix must be (cutoff+1) x (cutoff+1)");
  }
  bool any = false;
  for (Eigen::Index i = 0; i <= cutoff; ++i)
    for (Eigen::Index k = 0; k <= cutoff; ++k) {
      if (c_(i, k) == Complex{}) continue;
      const int d = static_cast<int>(i - k);
      raise_ = any ? std::max(raise_, d) : d;
      lower_ = any ? std::max(lower_, -d) : -d;
      any = true;
    }
}

FockSymbol FockSymbol::zero(unsigned cutoff) {
  return {cutoff, Eigen::MatrixXcd::Zero(cutoff + 1, cutoff + 1)};
}

FockSymbol FockSymbol::basis(unsigned cutoff, unsigned m, unsigned n, Complex c) {
  if (m > cutoff || n > cutoff) throw DimensionError("basis index above cutoff");
  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(cutoff + 1, cutoff + 1);
  mat(m, n) = c;
  return {cutoff, std::move(mat)};
}

FockSymbol FockSymbol::from_polynomial(const BosonPolynomial& p, unsigned cutoff) {
  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(cutoff + 1, cutoff + 1);
  for (const auto& [key, c] : p.terms()) {
    const auto [a, b] = key;
    // (b⁺)^b (b⁻)^a |k⟩ = √(k!/(k−a)!) √((k−a+b)!/(k−a)!) |k − a + b⟩
    for (unsigned k = a; k <= cutoff; ++k) {
      const unsigned row = k - a + b;
      if (row > cutoff) break;
      mat(row, k) += c * std::sqrt(falling(k, a) * falling(row, b));
    }
  }
  FockSymbol s(cutoff, std::move(mat));
  // bands follow the polynomial, not the possibly clipped matrix
  bool any = false;
  for (const auto& [key, c] : p.terms()) {
    const int d = static_cast<int>(key.second) - static_cast<int>(key.first);
    s.raise_ = any ? std::max(s.raise_, d) : d;
    s.lower_ = any ? std::max(s.lower_, -d) : -d;
    any = true;
  }
  return s;
}

Complex FockSymbol::evaluate(Complex z) const {
  const double r2 = std::norm(z);
  Complex s{};
  for (unsigned m = 0; m <= cutoff_; ++m)
    for (unsigned n = 0; n <= cutoff_; ++n) {
      if (c_(m, n) == Complex{}) continue;
      const double norm = std::sqrt(std::tgamma(m + 1.0) * std::tgamma(n + 1.0));
      s += c_(m, n) * std::pow(std::conj(z), m) * std::pow(z, n) / norm;
    }
  return s * std::exp(-r2);
}

FockSymbol FockSymbol::adjoint() const {
  FockSymbol r = *this;
  r.c_ = c_.adjoint();
  std::swap(r.raise_, r.lower_);
  return r;
}

void FockSymbol::merge_bounds(const FockSymbol& o) {
  if (o.cutoff_ != cutoff_) throw DimensionError("Fock symbols have different cutoffs");
  exact_ = std::min(exact_, o.exact_);
  raise_ = std::max(raise_, o.raise_);
  lower_ = std::max(lower_, o.lower_);
}

FockSymbol& FockSymbol::operator+=(const FockSymbol& o) {
  merge_bounds(o);
  c_ += o.c_;
  return *this;
}

FockSymbol& FockSymbol::operator-=(const FockSymbol& o) {
  merge_bounds(o);
  c_ -= o.c_;
  return *this;
}

FockSymbol& FockSymbol::operator*=(Complex c) {
  c_ *= c;
  return *this;
}

FockSymbol fock_star(const FockSymbol& x, const FockSymbol& y) {
  if (x.cutoff_ != y.cutoff_) throw DimensionError("fock_star: cutoff mismatch");
  FockSymbol r = x;
  r.c_ = x.c_ * y.c_;
  // the sum over intermediate states reaches min(i + lower_x, j + raise_y)
  r.exact_ = std::min(x.exact_, y.exact_) - std::min(std::max(x.lower_, 0), std::max(y.raise_, 0));
  r.exact_ = std::max(r.exact_, -1);
  r.raise_ = x.raise_ + y.raise_;
  r.lower_ = x.lower_ + y.lower_;
  return r;
}

double max_exact_difference(const FockSymbol& x, const FockSymbol& y) {
  if (x.cutoff() != y.cutoff()) throw DimensionError("Fock symbols have different cutoffs");
  const int e = std::min(x.exact_through(), y.exact_through());
  if (e < 0) return 0.0;
  return (x.matrix() - y.matrix()).topLeftCorner(e + 1, e + 1).cwiseAbs().maxCoeff();
}

nlohmann::json to_json(const FockSymbol& s) {
  nlohmann::json c = nlohmann::json::array();
  for (unsigned m = 0; m <= s.cutoff(); ++m)
    for (unsigned n = 0; n <= s.cutoff(); ++n) c.push_back({s.coefficient(m, n).real(), s.coefficient(m, n).imag()});
  return {{"cutoff", s.cutoff()}, {"c", c}};
}

FockSymbol fock_symbol_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("cutoff") || !j.contains("c")) {
    throw DomainError("Fock symbol JSON needs \"cutoff\" and \"c\"");
  }
  const auto cutoff = j.at("cutoff").get<unsigned>();
  const auto& c = j.at("c");
  const std::size_t dim = cutoff + 1;
  if (!c.is_array() || c.size() != dim * dim) throw DimensionError("Fock symbol JSON: \"c\" must have (cutoff+1)^2 entries");
  Eigen::MatrixXcd mat(dim, dim);
  for (std::size_t k = 0; k < c.size(); ++k) {
    const auto& e = c[k];
    if (!e.is_array() || e.size() != 2) throw DomainError("Fock symbol JSON: entries are [re, im]");
    mat(k / dim, k % dim) = Complex(e[0].get<double>(), e[1].get<double>());
  }
  return {cutoff, std::move(mat)};
}

Report star_vacuum_check(unsigned cutoff) {
  if (cutoff < 1) throw DomainError("cutoff must be at least 1");
  Report r;
  r.suite = "susy";
  const auto z = FockSymbol::from_polynomial(BosonPolynomial::z(), cutoff);
  const auto zb = FockSymbol::from_polynomial(BosonPolynomial::zbar(), cutoff);
  const auto vac = FockSymbol::basis(cutoff, 0, 0);
  const auto zero = FockSymbol::zero(cutoff);
  r.add(make_check("boson.vacuum", "z ⋆̄ Φ00 = Φ00 ⋆̄ z̄ = 0",
                   std::max(max_exact_difference(fock_star(z, vac), zero),
                            max_exact_difference(fock_star(vac, zb), zero)),
                   0.0));
  r.add(make_info("boson.vacuum.other_side", "Φ00 ⋆̄ z = Φ01", max_exact_difference(fock_star(vac, z), FockSymbol::basis(cutoff, 0, 1)),
                  "the opposite side does not annihilate the vacuum"));
  r.finalize();
  return r;
}

Report boson_relations_check(unsigned cutoff, unsigned trials, std::uint64_t seed, unsigned max_degree) {
  if (cutoff < 1) throw DomainError("cutoff must be at least 1");
  Report r = star_vacuum_check(cutoff);
  const auto Phi = [cutoff](int m, int n, double c = 1.0) {
    if (m < 0 || n < 0 || m > static_cast<int>(cutoff) || n > static_cast<int>(cutoff)) return FockSymbol::zero(cutoff);
    return FockSymbol::basis(cutoff, static_cast<unsigned>(m), static_cast<unsigned>(n), c);
  };
  const auto z = FockSymbol::from_polynomial(BosonPolynomial::z(), cutoff);
  const auto zb = FockSymbol::from_polynomial(BosonPolynomial::zbar(), cutoff);
  const auto h = FockSymbol::from_polynomial(BosonPolynomial::monomial(1, 1), cutoff);

  double zl = 0, zbl = 0, zr = 0, zbr = 0, hl = 0, hr = 0, hl_printed = 0, hr_printed = 0;
  for (int n = 0; n <= static_cast<int>(cutoff); ++n) {
    for (int m = 0; m <= static_cast<int>(cutoff); ++m) {
      const auto p = Phi(n, m);
      zl = std::max(zl, max_exact_difference(fock_star(z, p), Phi(n - 1, m, std::sqrt(n))));
      zbl = std::max(zbl, max_exact_difference(fock_star(zb, p), Phi(n + 1, m, std::sqrt(n + 1))));
      zr = std::max(zr, max_exact_difference(fock_star(p, z), Phi(n, m + 1, std::sqrt(m + 1))));
      zbr = std::max(zbr, max_exact_difference(fock_star(p, zb), Phi(n, m - 1, std::sqrt(m))));
      hl = std::max(hl, max_exact_difference(fock_star(h, p), p * Complex(n)));
      hr = std::max(hr, max_exact_difference(fock_star(p, h), p * Complex(m)));
      hl_printed = std::max(hl_printed, max_exact_difference(fock_star(h, p), p * Complex(m)));
      hr_printed = std::max(hr_printed, max_exact_difference(fock_star(p, h), p * Complex(n)));
    }
  }
  r.add(make_check("boson.ladder.z_left", "z ⋆̄ Φnm = √n Φ(n-1)m", zl, 0.0));
  r.add(make_check("boson.ladder.zbar_left", "z̄ ⋆̄ Φnm = √(n+1) Φ(n+1)m", zbl, 0.0));
  r.add(make_check("boson.ladder.z_right", "Φnm ⋆̄ z = √(m+1) Φn(m+1)", zr, 0.0));
  r.add(make_check("boson.ladder.zbar_right", "Φnm ⋆̄ z̄ = √m Φn(m-1)", zbr, 0.0));
  r.add(make_check("boson.hamiltonian.left", "zz̄ ⋆̄ Φnm = n Φnm", hl, 0.0));
  r.add(make_check("boson.hamiltonian.right", "Φnm ⋆̄ zz̄ = m Φnm", hr, 0.0));
  r.add(make_info("boson.hamiltonian.printed", "zz̄ ⋆̄ Φnm = m Φnm and Φnm ⋆̄ zz̄ = n Φnm",
                  std::max(hl_printed, hr_printed), "eigenvalue labels are exchanged relative to the operator product"));

  const unsigned small = std::min(cutoff, 5u);
  double ortho = 0, ortho_printed = 0;
  for (unsigned m = 0; m <= small; ++m)
    for (unsigned n = 0; n <= small; ++n)
      for (unsigned m2 = 0; m2 <= small; ++m2)
        for (unsigned n2 = 0; n2 <= small; ++n2) {
          const auto prod = fock_star(Phi(m, n), Phi(m2, n2));
          ortho = std::max(ortho, max_exact_difference(prod, n == m2 ? Phi(m, n2) : FockSymbol::zero(cutoff)));
          ortho_printed = std::max(ortho_printed,
                                   max_exact_difference(prod, m == n2 ? Phi(m, n2) : FockSymbol::zero(cutoff)));
        }
  r.add(make_check("boson.orthogonality", "Φmn ⋆̄ Φm'n' = δ_nm' Φmn'", ortho, 0.0));
  r.add(make_info("boson.orthogonality.printed", "Φmn ⋆̄ Φm'n' = δ_mn' Φmn'", ortho_printed,
                  "the Kronecker index must pair the inner labels n and m'"));

  {
    const auto z_p = BosonPolynomial::z();
    const auto zb_p = BosonPolynomial::zbar();
    const auto zzb = BosonPolynomial::monomial(1, 1);
    double ex = max_abs_difference(voros_star_poly(z_p, zb_p), zzb + BosonPolynomial::constant(1.0));
    ex = std::max(ex, max_abs_difference(voros_star_poly(zb_p, z_p), zzb));
    ex = std::max(ex, max_abs_difference(voros_star_poly(zzb, zzb), BosonPolynomial::monomial(2, 2) + zzb));
    r.add(make_check("boson.poly.examples", "z ⋆̄ z̄ = zz̄ + 1, z̄ ⋆̄ z = z̄z, zz̄ ⋆̄ zz̄ = z²z̄² + zz̄", ex, 0.0));
  }

  Rng rng(seed);
  double agree = 0, assoc = 0;
  for (unsigned t = 0; t < trials; ++t) {
    const auto p = random_polynomial(max_degree, rng);
    const auto q = random_polynomial(max_degree, rng);
    const auto s = random_polynomial(max_degree, rng);
    const auto pq = voros_star_poly(p, q);
    agree = std::max(agree, max_exact_difference(fock_star(FockSymbol::from_polynomial(p, cutoff),
                                                           FockSymbol::from_polynomial(q, cutoff)),
                                                 FockSymbol::from_polynomial(pq, cutoff)));
    const auto lhs = voros_star_poly(pq, s);
    const auto rhs = voros_star_poly(p, voros_star_poly(q, s));
    assoc = std::max(assoc, max_abs_difference(lhs, rhs) / std::max(1.0, lhs.max_abs()));
  }
  r.add(make_check("boson.poly_vs_fock", "Fock ⋆̄ = polynomial ⋆̄ below cutoff, degree ≤ " + std::to_string(max_degree),
                   agree, 1e-10));
  r.add(make_check("boson.poly.associativity", "(p ⋆̄ q) ⋆̄ s = p ⋆̄ (q ⋆̄ s), relative", assoc, 1e-12));
  r.finalize();
  return r;
}

}  // namespace gstar
