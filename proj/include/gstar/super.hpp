// Supersymmetric oscillator symbols: one bosonic mode (z, z̄) and one fermionic
// mode (θ, θ̄). A symbol is Σ_f B_f · f over the fermionic monomials
// f ∈ {1, θ̄, θ, θ̄θ}, indexed by their slot mask (1 → 0, θ̄ → 1, θ → 2, θ̄θ → 3).
// Bosonic coefficients are even, so
//   (B f) ⋆_susy (B' f') = (B ⋆̄ B') (f ⋆ f').
#pragma once

#include <array>
#include <variant>

#include "gstar/boson.hpp"
#include "gstar/fock.hpp"
#include "gstar/report.hpp"

namespace gstar {

template <class B>
struct SuperComponents {
  std::array<B, 4> c;

  B& operator[](unsigned f) { return c.at(f); }
  const B& operator[](unsigned f) const { return c.at(f); }
};

using SuperPolynomial = SuperComponents<BosonPolynomial>;
using SuperFock = SuperComponents<FockSymbol>;

/// A super symbol in either bosonic representation.
using SuperSymbol = std::variant<SuperPolynomial, SuperFock>;

SuperPolynomial super_from(const BosonPolynomial& bosonic, const GrassmannElement& fermionic);
SuperFock super_from(const FockSymbol& bosonic, const GrassmannElement& fermionic);
SuperFock to_fock(const SuperPolynomial& p, unsigned cutoff);

SuperPolynomial operator+(const SuperPolynomial& a, const SuperPolynomial& b);
SuperPolynomial operator-(const SuperPolynomial& a, const SuperPolynomial& b);
SuperPolynomial operator*(const SuperPolynomial& a, Complex c);
SuperFock operator+(const SuperFock& a, const SuperFock& b);
SuperFock operator-(const SuperFock& a, const SuperFock& b);
SuperFock operator*(const SuperFock& a, Complex c);

/// Ordinary product: bosonic parts multiply, fermionic monomials anticommute.
SuperPolynomial multiply(const SuperPolynomial& a, const SuperPolynomial& b);

SuperPolynomial super_star(const SuperPolynomial& a, const SuperPolynomial& b);
SuperFock super_star(const SuperFock& a, const SuperFock& b);
/// Throws DomainError when the two operands use different representations.
SuperSymbol super_star(const SuperSymbol& a, const SuperSymbol& b);

SuperPolynomial involution(const SuperPolynomial& a);
SuperFock involution(const SuperFock& a);

double max_abs_difference(const SuperPolynomial& a, const SuperPolynomial& b);
/// Compared on the exact block of every component.
double max_exact_difference(const SuperFock& a, const SuperFock& b);

std::string to_string(const SuperPolynomial& a);
std::string to_string(const SuperFock& a);
std::string to_string(const SuperSymbol& a);
nlohmann::json to_json(const SuperSymbol& a);
/// Inverse of to_json for either representation.
SuperSymbol super_symbol_from_json(const nlohmann::json& j);

struct SuperchargeSymbols {
  SuperPolynomial h;       // z̄z + θ̄θ
  SuperPolynomial q_minus; // zθ̄
  SuperPolynomial q_plus;  // z̄θ
};

SuperchargeSymbols supercharge_symbols();

/// Operator on H_b ⊗ H_f at the cutoff, basis |n, s⟩ at index 2n + s.
Matrix super_operator(const SuperFock& a);
/// Inverse of super_operator.
SuperFock super_symbol_of(unsigned cutoff, const Matrix& op);

/// sl(1/1) relations, degeneracy of the spectrum, tensor-oracle agreement,
/// and associativity of ⋆_susy in both representations.
Report susy_check(unsigned cutoff, unsigned trials, std::uint64_t seed);

}  // namespace gstar
