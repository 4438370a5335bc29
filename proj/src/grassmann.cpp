#include "gstar/grassmann.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace gstar {

namespace {

void check_modes(unsigned modes) {
  if (modes > kMaxModes) {
    throw DimensionError("number of modes " + std::to_string(modes) + " exceeds limit " +
                         std::to_string(kMaxModes));
  }
}

// Involution of a single monomial: returns the swapped, reversed monomial and its sign.
std::pair<std::uint32_t, double> involute_monomial(std::uint32_t mask, unsigned modes) {
  std::vector<unsigned> seq;
  for (std::uint32_t m = mask; m != 0; m &= m - 1) {
    const auto s = static_cast<unsigned>(std::countr_zero(m));
    seq.push_back(s < modes ? s + modes : s - modes);
  }
  std::reverse(seq.begin(), seq.end());
  std::uint32_t out = 0;
  double sign = 1.0;
  for (unsigned s : seq) {
    sign *= detail::merge_sign(out, 1u << s);
    out |= 1u << s;
  }
  return {out, sign};
}

}  // namespace

unsigned slot_of(GeneratorIndex g, unsigned modes) {
  if (g.site < 1 || g.site > modes) {
    throw DimensionError("generator site " + std::to_string(g.site) + " outside 1.." +
                         std::to_string(modes));
  }
  return g.kind == GeneratorKind::bar ? g.site - 1 : modes + g.site - 1;
}

GeneratorIndex generator_at(unsigned slot, unsigned modes) {
  if (slot >= 2 * modes) throw DimensionError("slot out of range");
  return slot < modes ? theta_bar(slot + 1) : theta(slot - modes + 1);
}

std::string_view to_string(Parity p) {
  switch (p) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    case Parity::mixed: return "mixed";
  }
  return "mixed";
}

GrassmannElement::GrassmannElement(unsigned modes) : modes_(modes) { check_modes(modes); }

GrassmannElement GrassmannElement::scalar(unsigned modes, Complex c) {
  GrassmannElement e(modes);
  e.add_term(Monomial{}, c);
  return e;
}

GrassmannElement GrassmannElement::generator(unsigned modes, GeneratorIndex g, Complex c) {
  GrassmannElement e(modes);
  e.add_term(Monomial{1u << slot_of(g, modes)}, c);
  return e;
}

GrassmannElement GrassmannElement::monomial(unsigned modes, Monomial m, Complex c) {
  GrassmannElement e(modes);
  if (modes < 16 && (m.mask() >> (2 * modes)) != 0) throw DimensionError("monomial outside algebra");
  e.add_term(m, c);
  return e;
}

GrassmannElement GrassmannElement::product_of(unsigned modes, const std::vector<GeneratorIndex>& gens,
                                              Complex c) {
  std::uint32_t mask = 0;
  double sign = 1.0;
  for (const auto& g : gens) {
    const std::uint32_t bit = 1u << slot_of(g, modes);
    if (mask & bit) return GrassmannElement(modes);
    sign *= detail::merge_sign(mask, bit);
    mask |= bit;
  }
  return monomial(modes, Monomial{mask}, c * sign);
}

Complex GrassmannElement::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Complex{} : it->second;
}

void GrassmannElement::add_term(Monomial m, Complex c) {
  if (c == Complex{}) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex{}) terms_.erase(it);
  }
}

GrassmannElement GrassmannElement::even_part() const {
  GrassmannElement out(modes_);
  for (const auto& [m, c] : terms_)
    if (m.degree() % 2 == 0) out.terms_.emplace(m, c);
  return out;
}

GrassmannElement GrassmannElement::odd_part() const {
  GrassmannElement out(modes_);
  for (const auto& [m, c] : terms_)
    if (m.degree() % 2 == 1) out.terms_.emplace(m, c);
  return out;
}

GrassmannElement GrassmannElement::pruned(double tol) const {
  GrassmannElement out(modes_);
  for (const auto& [m, c] : terms_)
    if (std::abs(c) > tol) out.terms_.emplace(m, c);
  return out;
}

double GrassmannElement::max_abs() const {
  double r = 0.0;
  for (const auto& [m, c] : terms_) r = std::max(r, std::abs(c));
  return r;
}

void GrassmannElement::require_same_modes(const GrassmannElement& o, const char* what) const {
  if (modes_ != o.modes_) {
    throw DimensionError(std::string(what) + ": mode mismatch (" + std::to_string(modes_) + " vs " +
                         std::to_string(o.modes_) + ")");
  }
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& o) {
  require_same_modes(o, "add");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& o) {
  require_same_modes(o, "subtract");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GrassmannElement& GrassmannElement::operator*=(Complex c) {
  if (c == Complex{}) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    if (it->second == Complex{}) it = terms_.erase(it);
    else ++it;
  }
  return *this;
}

double max_abs_difference(const GrassmannElement& a, const GrassmannElement& b) {
  if (a.modes() != b.modes()) throw DimensionError("compare: mode mismatch");
  return (a - b).max_abs();
}

GrassmannElement multiply(const GrassmannElement& a, const GrassmannElement& b) {
  if (a.modes() != b.modes()) throw DimensionError("multiply: mode mismatch");
  GrassmannElement out(a.modes());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.mask() & mb.mask()) continue;
      out.add_term(Monomial{ma.mask() | mb.mask()}, ca * cb * detail::merge_sign(ma.mask(), mb.mask()));
    }
  }
  return out;
}

GrassmannElement left_derivative(GeneratorIndex g, const GrassmannElement& a) {
  const unsigned slot = slot_of(g, a.modes());
  const std::uint32_t bit = 1u << slot;
  GrassmannElement out(a.modes());
  for (const auto& [m, c] : a.terms()) {
    if (!(m.mask() & bit)) continue;
    out.add_term(Monomial{m.mask() & ~bit}, c * detail::left_sign(m.mask(), slot));
  }
  return out;
}

GrassmannElement right_derivative(GeneratorIndex g, const GrassmannElement& a) {
  const unsigned slot = slot_of(g, a.modes());
  const std::uint32_t bit = 1u << slot;
  GrassmannElement out(a.modes());
  for (const auto& [m, c] : a.terms()) {
    if (!(m.mask() & bit)) continue;
    out.add_term(Monomial{m.mask() & ~bit}, c * detail::right_sign(m.mask(), slot));
  }
  return out;
}

GrassmannElement berezin_integrate(GeneratorIndex g, const GrassmannElement& a) {
  return left_derivative(g, a);
}

GrassmannElement berezin_integrate_measure(const std::vector<unsigned>& sites, const GrassmannElement& a) {
  GrassmannElement r = a;
  for (auto it = sites.rbegin(); it != sites.rend(); ++it) {
    r = berezin_integrate(theta(*it), r);
    r = berezin_integrate(theta_bar(*it), r);
  }
  return r;
}

GrassmannElement involution(const GrassmannElement& a) {
  GrassmannElement out(a.modes());
  for (const auto& [m, c] : a.terms()) {
    const auto [mask, sign] = involute_monomial(m.mask(), a.modes());
    out.add_term(Monomial{mask}, std::conj(c) * sign);
  }
  return out;
}

GrassmannElement exp_nilpotent(const GrassmannElement& a) {
  if (a.scalar_part() != Complex{}) {
    throw DomainError("exp_nilpotent: argument has a nonzero scalar part");
  }
  GrassmannElement sum = GrassmannElement::scalar(a.modes(), 1.0);
  GrassmannElement power = sum;
  for (unsigned k = 1; k <= a.slots(); ++k) {
    power = multiply(power, a) * Complex(1.0 / k);
    if (power.is_zero()) break;
    sum += power;
  }
  return sum;
}

Parity parity_of(const GrassmannElement& a) {
  bool even = false;
  bool odd = false;
  for (const auto& [m, c] : a.terms()) (m.degree() % 2 ? odd : even) = true;
  if (even && odd) return Parity::mixed;
  return odd ? Parity::odd : Parity::even;
}

GrassmannElement embed(const GrassmannElement& a, unsigned modes, unsigned site_offset) {
  if (a.modes() + site_offset > modes) throw DimensionError("embed: target algebra too small");
  GrassmannElement out(modes);
  for (const auto& [m, c] : a.terms()) {
    std::uint32_t mask = 0;
    for (std::uint32_t r = m.mask(); r != 0; r &= r - 1) {
      const auto s = static_cast<unsigned>(std::countr_zero(r));
      GeneratorIndex g = generator_at(s, a.modes());
      g.site += site_offset;
      mask |= 1u << slot_of(g, modes);
    }
    // bar block stays ahead of the unbar block, so relative order is unchanged
    out.add_term(Monomial{mask}, c);
  }
  return out;
}

std::string monomial_tokens(Monomial m, unsigned modes) {
  std::string s;
  for (std::uint32_t r = m.mask(); r != 0; r &= r - 1) {
    const auto slot = static_cast<unsigned>(std::countr_zero(r));
    const GeneratorIndex g = generator_at(slot, modes);
    if (!s.empty()) s += ' ';
    s += (g.kind == GeneratorKind::bar ? "tb" : "t") + std::to_string(g.site);
  }
  return s;
}

std::pair<Monomial, double> parse_monomial_tokens(std::string_view tokens, unsigned modes) {
  std::vector<GeneratorIndex> gens;
  std::istringstream in{std::string(tokens)};
  std::string tok;
  while (in >> tok) {
    GeneratorKind kind;
    std::string_view digits;
    if (tok.starts_with("tb")) {
      kind = GeneratorKind::bar;
      digits = std::string_view(tok).substr(2);
    } else if (tok.starts_with("t")) {
      kind = GeneratorKind::unbar;
      digits = std::string_view(tok).substr(1);
    } else {
      throw DomainError("bad generator token '" + tok + "'");
    }
    unsigned site = 0;
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), site);
    if (ec != std::errc{} || p != digits.data() + digits.size() || digits.empty()) {
      throw DomainError("bad generator token '" + tok + "'");
    }
    gens.push_back({kind, site});
  }
  std::uint32_t mask = 0;
  double sign = 1.0;
  for (const auto& g : gens) {
    const std::uint32_t bit = 1u << slot_of(g, modes);
    if (mask & bit) throw DomainError("repeated generator in monomial '" + std::string(tokens) + "'");
    sign *= detail::merge_sign(mask, bit);
    mask |= bit;
  }
  return {Monomial{mask}, sign};
}

std::string format_real(double x) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, p);
}

namespace {

// Coefficient text for a term; `negate` tells the caller to join with " - ".
std::string format_coefficient(Complex c, bool& negate) {
  negate = false;
  if (c.imag() == 0.0) {
    negate = std::signbit(c.real());
    return format_real(std::abs(c.real()));
  }
  if (c.real() == 0.0) {
    negate = std::signbit(c.imag());
    return format_real(std::abs(c.imag())) + "i";
  }
  std::string s = "(" + format_real(c.real());
  s += std::signbit(c.imag()) ? "-" : "+";
  s += format_real(std::abs(c.imag())) + "i)";
  return s;
}

}  // namespace

std::string format_linear_combination(const std::vector<std::pair<Complex, std::string>>& terms) {
  std::string out;
  bool first = true;
  for (const auto& [c, mono] : terms) {
    bool negate = false;
    std::string coeff = format_coefficient(c, negate);
    std::string term;
    if (mono.empty()) term = coeff;
    else if (coeff == "1") term = mono;
    else term = coeff + " " + mono;
    if (first) out = (negate ? "-" : "") + term;
    else out += (negate ? " - " : " + ") + term;
    first = false;
  }
  return first ? "0" : out;
}

std::string to_string(const GrassmannElement& a) {
  std::vector<std::pair<Complex, std::string>> terms;
  for (const auto& [m, c] : a.terms()) terms.emplace_back(c, monomial_tokens(m, a.modes()));
  return format_linear_combination(terms);
}

nlohmann::json to_json(const GrassmannElement& a) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : a.terms()) {
    terms.push_back({{"mono", monomial_tokens(m, a.modes())}, {"re", c.real()}, {"im", c.imag()}});
  }
  return {{"n", a.modes()}, {"terms", std::move(terms)}};
}

GrassmannElement grassmann_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("terms")) {
    throw DomainError("element JSON needs fields 'n' and 'terms'");
  }
  const auto n = j.at("n").get<unsigned>();
  GrassmannElement out(n);
  for (const auto& t : j.at("terms")) {
    auto [m, sign] = parse_monomial_tokens(t.value("mono", std::string{}), n);
    const Complex c(t.value("re", 0.0), t.value("im", 0.0));
    out.add_term(m, c * sign);
  }
  return out;
}

std::vector<Complex> coefficient_vector(const GrassmannElement& a) {
  std::vector<Complex> v(std::size_t{1} << a.slots());
  for (const auto& [m, c] : a.terms()) v[m.mask()] = c;
  return v;
}

GrassmannElement from_coefficient_vector(unsigned modes, const std::vector<Complex>& v) {
  if (v.size() != (std::size_t{1} << (2 * modes))) throw DimensionError("coefficient vector has wrong length");
  GrassmannElement out(modes);
  for (std::size_t k = 0; k < v.size(); ++k) out.add_term(Monomial{static_cast<std::uint32_t>(k)}, v[k]);
  return out;
}

}  // namespace gstar
