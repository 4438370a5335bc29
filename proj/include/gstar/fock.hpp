// Matrix representation of N fermionic modes and the symbol map.
//
// Basis |n_1 … n_N⟩ is indexed by the integer Σ n_i 2^{i-1}. Ladder operators
// use a Jordan–Wigner sign string with site 1 innermost:
//   f_i⁻ |n⟩ = (-1)^{n_1+…+n_{i-1}} |n - e_i⟩.
// A canonical monomial θ̄^n θ^m corresponds to f⁺^n f⁻^m with factors in
// ascending site order inside each block.
#pragma once

#include <Eigen/Dense>

#include "gstar/grassmann.hpp"

namespace gstar {

using Matrix = Eigen::MatrixXcd;

/// Largest N supported by the dense normal-ordering solve (4^N unknowns).
inline constexpr unsigned kMaxOracleModes = 5;

class FockOperator {
 public:
  FockOperator() = default;
  FockOperator(unsigned modes, Matrix m);

  static FockOperator identity(unsigned modes);
  static FockOperator zero(unsigned modes);

  unsigned modes() const { return modes_; }
  Eigen::Index dimension() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }

  FockOperator adjoint() const { return {modes_, matrix_.adjoint()}; }

  friend FockOperator operator*(const FockOperator& a, const FockOperator& b);
  friend FockOperator operator+(const FockOperator& a, const FockOperator& b);
  friend FockOperator operator-(const FockOperator& a, const FockOperator& b);
  friend FockOperator operator*(Complex c, const FockOperator& a) { return {a.modes_, c * a.matrix_}; }

 private:
  unsigned modes_ = 0;
  Matrix matrix_;
};

double max_abs_difference(const FockOperator& a, const FockOperator& b);

enum class Ladder : std::uint8_t { create, annihilate };

FockOperator ladder(unsigned modes, unsigned site, Ladder kind);

/// Coefficients a_{m,n} of A = Σ a f⁺^n f⁻^m, keyed by the canonical monomial
/// whose low N bits are n and high N bits are m.
using NormalOrderCoefficients = std::map<Monomial, Complex>;

NormalOrderCoefficients normal_order_decompose(const FockOperator& a);
/// Σ a f⁺^n f⁻^m for the given coefficient map.
FockOperator reconstruct(unsigned modes, const NormalOrderCoefficients& c);

GrassmannElement symbol_of(const FockOperator& a);
FockOperator operator_of(const GrassmannElement& a);

/// symbol_of(operator_of(a) · operator_of(b)).
GrassmannElement oracle_star(const GrassmannElement& a, const GrassmannElement& b);

/// Square matrix with Grassmann-valued entries acting on Fock space.
///
/// Entry g at (r, c) stands for g·|r⟩⟨c|. Grassmann generators anticommute with
/// odd Fock operators, so |r⟩⟨c| moving past an odd coefficient picks up
/// (-1)^{|r|+|c|}, where |r| counts occupied modes.
class GrassmannOperator {
 public:
  GrassmannOperator(unsigned fock_modes, unsigned grassmann_modes);

  static GrassmannOperator from_fock(const FockOperator& f, unsigned grassmann_modes);

  unsigned fock_modes() const { return fock_modes_; }
  unsigned grassmann_modes() const { return grassmann_modes_; }
  std::size_t dimension() const { return std::size_t{1} << fock_modes_; }

  const GrassmannElement& at(std::size_t r, std::size_t c) const { return entries_[r * dimension() + c]; }
  GrassmannElement& at(std::size_t r, std::size_t c) { return entries_[r * dimension() + c]; }

  /// g · op, with the coefficient placed to the left.
  friend GrassmannOperator operator*(const GrassmannElement& g, const GrassmannOperator& op);
  friend GrassmannOperator operator*(const GrassmannOperator& a, const GrassmannOperator& b);
  friend GrassmannOperator operator+(const GrassmannOperator& a, const GrassmannOperator& b);
  GrassmannOperator scaled(Complex c) const;
  bool is_zero() const;

 private:
  unsigned fock_modes_;
  unsigned grassmann_modes_;
  std::vector<GrassmannElement> entries_;
};

/// Power series of a nilpotent super-matrix; throws ConvergenceError if the
/// powers do not vanish within the bound.
GrassmannOperator exp_nilpotent(const GrassmannOperator& x, unsigned max_terms = 64);

/// Coefficients c_n(θ) of the ket |θ⟩ = Σ_n c_n(θ)|n⟩, built from sites
/// site_offset+1 … site_offset+N of an algebra with `grassmann_modes` modes.
std::vector<GrassmannElement> coherent_ket(unsigned fock_modes, unsigned grassmann_modes, unsigned site_offset = 0);
/// Coefficients of the bra ⟨θ| = Σ_n c̄_n(θ)⟨n|.
std::vector<GrassmannElement> coherent_bra(unsigned fock_modes, unsigned grassmann_modes, unsigned site_offset = 0);

struct OverlapReport {
  unsigned modes = 0;
  double identity_residual = 0.0;  // ∫dμ(η) |η⟩⟨η| vs the identity
  double overlap_residual = 0.0;   // |⟨θ|η⟩|² vs exp(-Σ(η̄-θ̄)(η-θ))
  double symbol_residual = 0.0;    // ⟨θ|A|θ⟩ vs symbol_of(A) on the operator basis
  bool pass = false;
};

OverlapReport coherent_overlap_check(unsigned modes);

}  // namespace gstar
