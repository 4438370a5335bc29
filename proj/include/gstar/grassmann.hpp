// Complex Grassmann algebra on 2N generators with Berezin calculus.
//
// Generators are θ̄_1..θ̄_N, θ_1..θ_N. A monomial is a 2N-bit occupancy mask;
// slot k < N holds θ̄_{k+1}, slot N + k holds θ_{k+1}. Canonical factor order
// is ascending slot order, so every stored monomial reads θ̄^n θ^m, the same
// layout as a normal-ordered product f⁺^n f⁻^m.
//
// The pointwise product is fully anticommuting: {θ_i, θ_j} = {θ̄_i, θ̄_j} =
// {θ_i, θ̄_j} = 0. The δ_ij only appears under the star product.
#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace gstar {

using Complex = std::complex<double>;

/// Largest supported number of fermionic modes (2N slots must fit the mask).
inline constexpr unsigned kMaxModes = 12;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in algebras with different numbers of modes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the value of an argument does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A truncated series did not reach its tolerance within the term bound.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

enum class GeneratorKind : std::uint8_t { bar, unbar };

struct GeneratorIndex {
  GeneratorKind kind = GeneratorKind::unbar;
  unsigned site = 1;  // 1-based

  friend bool operator==(const GeneratorIndex&, const GeneratorIndex&) = default;
};

constexpr GeneratorIndex theta(unsigned site) { return {GeneratorKind::unbar, site}; }
constexpr GeneratorIndex theta_bar(unsigned site) { return {GeneratorKind::bar, site}; }

/// Slot of a generator in an algebra with `modes` modes. Throws on bad site.
unsigned slot_of(GeneratorIndex g, unsigned modes);
GeneratorIndex generator_at(unsigned slot, unsigned modes);

/// Occupancy mask of a monomial in canonical slot order.
class Monomial {
 public:
  constexpr Monomial() = default;
  constexpr explicit Monomial(std::uint32_t mask) : mask_(mask) {}

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr unsigned degree() const { return static_cast<unsigned>(std::popcount(mask_)); }
  constexpr bool contains(unsigned slot) const { return (mask_ >> slot) & 1u; }
  constexpr bool is_unit() const { return mask_ == 0; }

  friend constexpr auto operator<=>(Monomial, Monomial) = default;

 private:
  std::uint32_t mask_ = 0;
};

namespace detail {

/// (-1)^k as a double.
constexpr double sign_of(unsigned k) { return (k & 1u) ? -1.0 : 1.0; }

/// Sign of bringing the concatenation a·b of two canonical monomials back into
/// canonical order. Callers must ensure the masks are disjoint.
constexpr double merge_sign(std::uint32_t a, std::uint32_t b) {
  unsigned swaps = 0;
  while (b != 0) {
    const unsigned slot = static_cast<unsigned>(std::countr_zero(b));
    const std::uint32_t above = slot >= 31 ? 0u : (a >> (slot + 1));
    swaps += static_cast<unsigned>(std::popcount(above));
    b &= b - 1;
  }
  return sign_of(swaps);
}

/// Sign picked up by moving the generator in `slot` to the front of `mask`.
constexpr double left_sign(std::uint32_t mask, unsigned slot) {
  return sign_of(static_cast<unsigned>(std::popcount(mask & ((1u << slot) - 1u))));
}

/// Sign picked up by moving the generator in `slot` to the back of `mask`.
constexpr double right_sign(std::uint32_t mask, unsigned slot) {
  const std::uint32_t above = slot >= 31 ? 0u : (mask >> (slot + 1));
  return sign_of(static_cast<unsigned>(std::popcount(above)));
}

}  // namespace detail

enum class Parity : std::uint8_t { even, odd, mixed };

std::string_view to_string(Parity p);

/// Exact sparse linear combination of canonical monomials.
///
/// Zero coefficients are never stored, so `operator==` is exact term-map
/// equality. Use `max_abs_difference` / `approx_equal` when comparing against
/// values that went through floating-point matrix arithmetic.
class GrassmannElement {
 public:
  using Terms = std::map<Monomial, Complex>;

  GrassmannElement() = default;
  explicit GrassmannElement(unsigned modes);

  static GrassmannElement scalar(unsigned modes, Complex c);
  static GrassmannElement generator(unsigned modes, GeneratorIndex g, Complex c = 1.0);
  static GrassmannElement monomial(unsigned modes, Monomial m, Complex c = 1.0);
  /// Ordered product of generators, e.g. {θ̄_1, θ_2}. Reordering signs are applied.
  static GrassmannElement product_of(unsigned modes, const std::vector<GeneratorIndex>& gens,
                                     Complex c = 1.0);

  unsigned modes() const { return modes_; }
  unsigned slots() const { return 2 * modes_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Complex coefficient(Monomial m) const;
  Complex scalar_part() const { return coefficient(Monomial{}); }

  /// Accumulates c onto monomial m, erasing the entry if it cancels to zero.
  void add_term(Monomial m, Complex c);

  GrassmannElement even_part() const;
  GrassmannElement odd_part() const;
  /// Drops all terms whose absolute value is at most `tol`.
  GrassmannElement pruned(double tol) const;
  /// Largest absolute coefficient, 0 for the zero element.
  double max_abs() const;

  GrassmannElement& operator+=(const GrassmannElement& o);
  GrassmannElement& operator-=(const GrassmannElement& o);
  GrassmannElement& operator*=(Complex c);

  friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) { return a += b; }
  friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) { return a -= b; }
  friend GrassmannElement operator*(GrassmannElement a, Complex c) { return a *= c; }
  friend GrassmannElement operator*(Complex c, GrassmannElement a) { return a *= c; }
  GrassmannElement operator-() const { return *this * Complex(-1.0); }

  friend bool operator==(const GrassmannElement& a, const GrassmannElement& b) {
    return a.modes_ == b.modes_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_modes(const GrassmannElement& o, const char* what) const;

  unsigned modes_ = 0;
  Terms terms_;
};

/// max over monomials of |a_m - b_m|. Throws DimensionError on mismatch.
double max_abs_difference(const GrassmannElement& a, const GrassmannElement& b);
inline bool approx_equal(const GrassmannElement& a, const GrassmannElement& b, double tol = 1e-12) {
  return max_abs_difference(a, b) <= tol;
}

GrassmannElement multiply(const GrassmannElement& a, const GrassmannElement& b);
inline GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
  return multiply(a, b);
}

GrassmannElement left_derivative(GeneratorIndex g, const GrassmannElement& a);
GrassmannElement right_derivative(GeneratorIndex g, const GrassmannElement& a);
/// ∫dg a. Berezin convention: ∫dθ 1 = 0, ∫dθ θ = 1, so this is the left derivative.
GrassmannElement berezin_integrate(GeneratorIndex g, const GrassmannElement& a);
/// ∫ Π_{i∈sites} dθ̄_i dθ_i a, innermost measure factor applied first.
GrassmannElement berezin_integrate_measure(const std::vector<unsigned>& sites, const GrassmannElement& a);

/// Antilinear anti-automorphism: θ_i ↔ θ̄_i, factor order reversed, coefficients conjugated.
GrassmannElement involution(const GrassmannElement& a);

/// Σ_k a^k / k! for an element without scalar part. Throws DomainError otherwise.
GrassmannElement exp_nilpotent(const GrassmannElement& a);

Parity parity_of(const GrassmannElement& a);

/// Embeds `a` into an algebra with more modes; site i of `a` becomes site i + offset.
GrassmannElement embed(const GrassmannElement& a, unsigned modes, unsigned site_offset = 0);

/// Space separated generator tokens, e.g. "tb1 tb2 t1"; empty for the unit.
std::string monomial_tokens(Monomial m, unsigned modes);
/// Inverse of monomial_tokens. Tokens may come in any order; returns the sign
/// needed to bring them into canonical order.
std::pair<Monomial, double> parse_monomial_tokens(std::string_view tokens, unsigned modes);

/// Plain-text form accepted back by the expression parser.
std::string to_string(const GrassmannElement& a);

nlohmann::json to_json(const GrassmannElement& a);
GrassmannElement grassmann_from_json(const nlohmann::json& j);

/// Coefficient vector of length 4^N indexed by monomial mask.
std::vector<Complex> coefficient_vector(const GrassmannElement& a);
GrassmannElement from_coefficient_vector(unsigned modes, const std::vector<Complex>& v);

/// Shortest round-trip decimal form of a double.
std::string format_real(double x);

/// "c1 m1 + c2 m2 - …" with unit coefficients omitted; "0" when empty.
std::string format_linear_combination(const std::vector<std::pair<Complex, std::string>>& terms);

}  // namespace gstar
