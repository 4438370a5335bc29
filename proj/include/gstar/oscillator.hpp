// Single fermionic oscillator H = f⁺f⁻ in the symbol calculus.
#pragma once

#include "gstar/report.hpp"
#include "gstar/star.hpp"

namespace gstar {

/// Symbol of |m⟩⟨n|, computed as ⟨θ|m⟩⟨n|θ⟩ from the coherent state. N = 1.
GrassmannElement projector_symbol(unsigned m, unsigned n);

/// Symbol of f⁺f⁻. N = 1.
GrassmannElement hamiltonian_symbol();

/// ⋆-vacuum, completion, eigen and ladder relations, and 𝒫 ⋆ 𝒫 against |m⟩⟨n|·|m'⟩⟨n'|.
Report ladder_relations_check();

/// Layout of the enlarged algebra used for the generating function: two modes
/// with θ̄ = θ̄_1, θ = θ_1, α = θ̄_2, β = θ_2.
inline constexpr unsigned kGeneratingModes = 2;
inline constexpr GeneratorIndex kAlpha = theta_bar(2);
inline constexpr GeneratorIndex kBeta = theta(2);

/// Matrix of e^{θf⁺ + θ̄f⁻} with Grassmann entries (row ⟨n|, column |m⟩).
std::vector<GrassmannElement> oscillator_exponential();

/// Φ = Σ_{n,m} α^n β^m ⟨n|e^{θf⁺ + θ̄f⁻}|m⟩.
GrassmannElement generating_function();
/// The closed form exp(−½(θ̄θ + αθ + βθ̄ + αβ)).
GrassmannElement generating_function_closed_form();

/// ∂_β^m ∂_α^n Φ at α = β = 0, returned in the one-mode algebra.
GrassmannElement generating_coefficient(const GrassmannElement& phi, unsigned n, unsigned m);

Report generating_derivative_check();

/// su(2) relations under ⋆̂ for j₊ = θ̄, j₋ = θ and several j₃ candidates.
Report su2_star_check();

/// C = ½(j₋⋆̂j₊ + j₊⋆̂j₋) + j₃⋆̂j₃.
GrassmannElement su2_casimir(const GrassmannElement& j3);

}  // namespace gstar
