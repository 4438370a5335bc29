// Grassmann star products built from exponentials of bidifferential operators.
//
// Every product here has the form
//
//   a ⋆ b = μ ∘ exp( Σ_{s,t} ω(s,t) ←∂_s ⊗ →∂_t ) (a ⊗ b)
//
// where ←∂_s is a right derivative acting on the left factor and →∂_t a left
// derivative acting on the right factor. The terms ←∂_s ⊗ →∂_t are even and
// commute, so the exponential expands into a sum over partial matchings of
// slots of a with slots of b.
//
// Sign convention (frozen after calibration against the Fock-space product):
// the derivatives of one matching are applied to both factors in the same
// sequence, i.e. the k-th right derivative taken from `a` is paired with the
// k-th left derivative taken from `b`, and the matched term enters with weight
// Π ω(s,t) and no further sign. Reversing the sequence on both sides flips two
// signs per transposition, so the result does not depend on the sequence.
//
//   coherent ⋆ : ω(θ_i, θ̄_i) = ħ
//   symmetric ⋆̂: ω(θ_i, θ̄_i) = ω(θ̄_i, θ_i) = ħ/2
#pragma once

#include <utility>
#include <vector>

#include "gstar/grassmann.hpp"

namespace gstar {

enum class ProductKind : std::uint8_t { coherent, symmetric };

struct StarKind {
  ProductKind kind = ProductKind::coherent;
  double hbar = 1.0;
};

std::string_view to_string(ProductKind k);
ProductKind product_kind_from_string(std::string_view s);

/// Sparse ω(s,t) table: for each left slot s, the right slots t it contracts with.
class ContractionTable {
 public:
  explicit ContractionTable(unsigned modes);

  static ContractionTable coherent(unsigned modes, double hbar = 1.0);
  static ContractionTable symmetric(unsigned modes, double hbar = 1.0);
  static ContractionTable for_kind(unsigned modes, StarKind k);
  /// Dense 2N x 2N weights, row = slot on the left factor, column = slot on the right.
  static ContractionTable from_weights(unsigned modes, const std::vector<std::vector<Complex>>& w);

  void set(unsigned left_slot, unsigned right_slot, Complex w);
  Complex weight(unsigned left_slot, unsigned right_slot) const;

  unsigned modes() const { return modes_; }
  bool is_zero() const;
  const std::vector<std::pair<unsigned, Complex>>& partners(unsigned left_slot) const {
    return partners_[left_slot];
  }

  /// max |ω - ω'| over all slot pairs.
  friend double max_weight_difference(const ContractionTable& a, const ContractionTable& b);

 private:
  unsigned modes_;
  std::vector<std::vector<std::pair<unsigned, Complex>>> partners_;
};

GrassmannElement star(const GrassmannElement& a, const GrassmannElement& b, const ContractionTable& table);
GrassmannElement star(const GrassmannElement& a, const GrassmannElement& b, StarKind k = {});

GrassmannElement star_commutator(const GrassmannElement& a, const GrassmannElement& b, StarKind k = {});
GrassmannElement star_anticommutator(const GrassmannElement& a, const GrassmannElement& b, StarKind k = {});

/// Truncation policy for star_exp.
struct StarExpOptions {
  double tolerance = 1e-15;  // relative to the running sum
  unsigned extra_terms = 64;  // bound is 4^N + extra_terms
};

/// Σ_k a^{⋆k}/k!. A scalar part c is factored out as e^c. Throws
/// ConvergenceError if the terms do not fall below tolerance within the bound.
GrassmannElement star_exp(const GrassmannElement& a, StarKind k = {}, StarExpOptions opts = {});

/// Equivalence map Π_i (1 - ħ/2 ∂_{θ_i} ∂_{θ̄_i}) between ⋆̂ and ⋆:
/// T(a) ⋆ T(b) = T(a ⋆̂ b).
GrassmannElement T_map(const GrassmannElement& a, double hbar = 1.0);
GrassmannElement T_inverse(const GrassmannElement& a, double hbar = 1.0);

/// Scales every generator by s (a degree-d monomial picks up s^d).
GrassmannElement rescale_generators(const GrassmannElement& a, double s);

}  // namespace gstar
