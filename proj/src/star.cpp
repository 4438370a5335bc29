#include "gstar/star.hpp"

#include <cmath>

namespace gstar {

std::string_view to_string(ProductKind k) {
  return k == ProductKind::coherent ? "coherent" : "symmetric";
}

ProductKind product_kind_from_string(std::string_view s) {
  if (s == "coherent") return ProductKind::coherent;
  if (s == "symmetric") return ProductKind::symmetric;
  throw DomainError("unknown product kind '" + std::string(s) + "' (expected coherent|symmetric)");
}

ContractionTable::ContractionTable(unsigned modes) : modes_(modes), partners_(2 * modes) {
  if (modes > kMaxModes) throw DimensionError("too many modes");
}

ContractionTable ContractionTable::coherent(unsigned modes, double hbar) {
  ContractionTable t(modes);
  for (unsigned i = 1; i <= modes; ++i) {
    t.set(slot_of(theta(i), modes), slot_of(theta_bar(i), modes), hbar);
  }
  return t;
}

ContractionTable ContractionTable::symmetric(unsigned modes, double hbar) {
  ContractionTable t(modes);
  for (unsigned i = 1; i <= modes; ++i) {
    t.set(slot_of(theta(i), modes), slot_of(theta_bar(i), modes), hbar / 2);
    t.set(slot_of(theta_bar(i), modes), slot_of(theta(i), modes), hbar / 2);
  }
  return t;
}

ContractionTable ContractionTable::for_kind(unsigned modes, StarKind k) {
  if (!(k.hbar >= 0.0)) throw DomainError("hbar must be non-negative");
  return k.kind == ProductKind::coherent ? coherent(modes, k.hbar) : symmetric(modes, k.hbar);
}

ContractionTable ContractionTable::from_weights(unsigned modes, const std::vector<std::vector<Complex>>& w) {
  ContractionTable t(modes);
  if (w.size() != 2 * modes) throw DimensionError("weight table has wrong size");
  for (unsigned s = 0; s < 2 * modes; ++s) {
    if (w[s].size() != 2 * modes) throw DimensionError("weight table has wrong size");
    for (unsigned r = 0; r < 2 * modes; ++r) t.set(s, r, w[s][r]);
  }
  return t;
}

void ContractionTable::set(unsigned left_slot, unsigned right_slot, Complex w) {
  if (left_slot >= 2 * modes_ || right_slot >= 2 * modes_) throw DimensionError("slot out of range");
  auto& row = partners_[left_slot];
  std::erase_if(row, [&](const auto& p) { return p.first == right_slot; });
  if (w != Complex{}) row.emplace_back(right_slot, w);
}

Complex ContractionTable::weight(unsigned left_slot, unsigned right_slot) const {
  for (const auto& [t, w] : partners_.at(left_slot))
    if (t == right_slot) return w;
  return {};
}

bool ContractionTable::is_zero() const {
  for (const auto& row : partners_)
    if (!row.empty()) return false;
  return true;
}

double max_weight_difference(const ContractionTable& a, const ContractionTable& b) {
  if (a.modes_ != b.modes_) throw DimensionError("contraction tables differ in modes");
  double r = 0.0;
  for (unsigned s = 0; s < 2 * a.modes_; ++s)
    for (unsigned t = 0; t < 2 * a.modes_; ++t) r = std::max(r, std::abs(a.weight(s, t) - b.weight(s, t)));
  return r;
}

namespace {

// Walks the slots of the left monomial in ascending order. Each slot is either
// left alone or contracted with a partner slot still present in the right
// monomial; derivative signs are taken against the current (partially
// differentiated) monomials, which realizes the same-sequence convention.
void contract_pair(std::uint32_t pending, std::uint32_t left, std::uint32_t right, Complex coeff,
                   const ContractionTable& table, GrassmannElement& out) {
  if (pending == 0) {
    if (left & right) return;
    out.add_term(Monomial{left | right}, coeff * detail::merge_sign(left, right));
    return;
  }
  const auto s = static_cast<unsigned>(std::countr_zero(pending));
  const std::uint32_t rest = pending & (pending - 1);
  contract_pair(rest, left, right, coeff, table, out);
  for (const auto& [t, w] : table.partners(s)) {
    const std::uint32_t tbit = 1u << t;
    if (!(right & tbit)) continue;
    const double sign = detail::right_sign(left, s) * detail::left_sign(right, t);
    contract_pair(rest, left & ~(1u << s), right & ~tbit, coeff * w * sign, table, out);
  }
}

}  // namespace

GrassmannElement star(const GrassmannElement& a, const GrassmannElement& b, const ContractionTable& table) {
  if (a.modes() != b.modes() || a.modes() != table.modes()) {
    throw DimensionError("star: mode mismatch");
  }
  GrassmannElement out(a.modes());
  for (const auto& [ma, ca] : a.terms()) {
    // only slots with at least one partner can be contracted
    std::uint32_t contractible = 0;
    for (std::uint32_t r = ma.mask(); r != 0; r &= r - 1) {
      const auto s = static_cast<unsigned>(std::countr_zero(r));
      if (!table.partners(s).empty()) contractible |= 1u << s;
    }
    for (const auto& [mb, cb] : b.terms()) {
      contract_pair(contractible, ma.mask(), mb.mask(), ca * cb, table, out);
    }
  }
  return out;
}

GrassmannElement star(const GrassmannElement& a, const GrassmannElement& b, StarKind k) {
  return star(a, b, ContractionTable::for_kind(a.modes(), k));
}

GrassmannElement star_commutator(const GrassmannElement& a, const GrassmannElement& b, StarKind k) {
  const auto table = ContractionTable::for_kind(a.modes(), k);
  return star(a, b, table) - star(b, a, table);
}

GrassmannElement star_anticommutator(const GrassmannElement& a, const GrassmannElement& b, StarKind k) {
  const auto table = ContractionTable::for_kind(a.modes(), k);
  return star(a, b, table) + star(b, a, table);
}

GrassmannElement star_exp(const GrassmannElement& a, StarKind k, StarExpOptions opts) {
  const auto table = ContractionTable::for_kind(a.modes(), k);
  const Complex scalar = a.scalar_part();
  GrassmannElement x = a;
  x.add_term(Monomial{}, -scalar);

  GrassmannElement sum = GrassmannElement::scalar(a.modes(), 1.0);
  GrassmannElement term = sum;
  const std::size_t bound = (std::size_t{1} << (2 * a.modes())) + opts.extra_terms;
  bool converged = x.is_zero();
  for (std::size_t n = 1; n <= bound && !converged; ++n) {
    term = star(term, x, table) * Complex(1.0 / static_cast<double>(n));
    sum += term;
    converged = term.is_zero() || term.max_abs() <= opts.tolerance * std::max(1.0, sum.max_abs());
  }
  if (!converged) {
    throw ConvergenceError("star_exp: series did not converge within " + std::to_string(bound) + " terms");
  }
  return sum * std::exp(scalar);
}

namespace {

GrassmannElement apply_T(const GrassmannElement& a, double factor) {
  GrassmannElement r = a;
  for (unsigned i = 1; i <= a.modes(); ++i) {
    const auto d = left_derivative(theta(i), left_derivative(theta_bar(i), r));
    r += d * Complex(factor);
  }
  return r;
}

}  // namespace

GrassmannElement T_map(const GrassmannElement& a, double hbar) { return apply_T(a, -hbar / 2); }

GrassmannElement T_inverse(const GrassmannElement& a, double hbar) { return apply_T(a, hbar / 2); }

GrassmannElement rescale_generators(const GrassmannElement& a, double s) {
  GrassmannElement out(a.modes());
  for (const auto& [m, c] : a.terms()) out.add_term(m, c * std::pow(s, static_cast<double>(m.degree())));
  return out;
}

}  // namespace gstar
