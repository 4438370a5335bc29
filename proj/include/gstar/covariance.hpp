// Unitary transformations on symbols and Bogoliubov canonical transformations.
//
// For an anti-hermitian even λ, 𝒟_λ a = λ ⋆ a − a ⋆ λ is the symbol of [Λ, A]
// and e^{−𝒟_λ} a is the symbol of e^{−Λ} A e^{Λ}. The exponential is taken on
// the 4^N dimensional coefficient space.
#pragma once

#include <Eigen/Dense>

#include "gstar/star.hpp"

namespace gstar {

using Matrix = Eigen::MatrixXcd;

/// N x N complex matrix with αᵀ = −α.
class AlphaMatrix {
 public:
  /// Throws DomainError unless m is square and exactly antisymmetric.
  explicit AlphaMatrix(Matrix m);

  unsigned modes() const { return static_cast<unsigned>(m_.rows()); }
  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

/// F⁻ = U f⁻ + V f⁺.
struct BogoliubovPair {
  Matrix U;
  Matrix V;

  /// max entry of |U Vᵀ + V Uᵀ| and |U U† + V V† − 1|.
  double canonical_residual() const;
};

/// λ = Σ_ij (α_ij/2) θ̄_i θ̄_j + (conj(α_ij)/2) θ_i θ_j.
GrassmannElement lambda_symbol(const AlphaMatrix& alpha);

/// Throws DomainError unless λ is even.
GrassmannElement d_lambda(const GrassmannElement& lambda, const GrassmannElement& a);
/// 𝒟_λ as a 4^N x 4^N matrix on coefficient vectors.
Matrix d_lambda_matrix(const GrassmannElement& lambda);

/// max entry of [𝒟_{λ1}, 𝒟_{λ2}] − 𝒟_{[λ1,λ2]⋆}.
double d_lambda_bracket_check(const GrassmannElement& lambda1, const GrassmannElement& lambda2);

/// Matrix exponential (Padé scaling and squaring).
Matrix expm(const Matrix& a);
/// e^{a} v for a block of columns v, by substepped Taylor series on a sparse
/// view of a, without forming e^{a}.
Matrix expm_times(const Matrix& a, Matrix v);

/// e^{−𝒟_λ} for one λ, precomputed once.
class UnitaryTransform {
 public:
  explicit UnitaryTransform(const GrassmannElement& lambda);

  unsigned modes() const { return modes_; }
  const Matrix& matrix() const { return exp_; }
  GrassmannElement apply(const GrassmannElement& a) const;

 private:
  unsigned modes_;
  Matrix exp_;
};

GrassmannElement transform_symbol(const GrassmannElement& lambda, const GrassmannElement& a);

/// U = cos√(αα†), V = α·sinc(α†α) with sinc(x) = sin√x/√x, both as power series.
BogoliubovPair bogoliubov_from_alpha(const AlphaMatrix& alpha);

struct PsiVariables {
  std::vector<GrassmannElement> psi;      // ψ_i = e^{−𝒟_λ} θ_i
  std::vector<GrassmannElement> psi_bar;  // ψ̄_i = e^{−𝒟_λ} θ̄_i
};

PsiVariables psi_variables(const GrassmannElement& lambda);
PsiVariables psi_variables(const AlphaMatrix& alpha);

/// Coefficient rows of the degree-one parts: row k of `psi` is ψ_k over slots.
struct LinearPsi {
  Matrix psi;      // N x 2N
  Matrix psi_bar;  // N x 2N
};
LinearPsi linear_parts(const PsiVariables& v);

/// Replaces θ_i → ψ_i, θ̄_i → ψ̄_i inside a, multiplying factors pointwise in
/// canonical order. The ψ's must be odd.
GrassmannElement substitute(const GrassmannElement& a, const PsiVariables& v);

struct CovarianceResult {
  double residual = 0.0;      // |e^{−𝒟_λ} a − a(ψ_lin, ψ̄_lin)|
  double nonlinearity = 0.0;  // largest coefficient of ψ beyond degree one
};

/// Compares e^{−𝒟_λ} a with the pointwise substitution of the linear parts of
/// ψ, ψ̄ into a. Throws DomainError if 𝒟_λ does not keep θ_i odd.
CovarianceResult check_covariance(const GrassmannElement& lambda, const GrassmannElement& a);
CovarianceResult check_covariance(const UnitaryTransform& t, const GrassmannElement& a);

/// Product ⋆̃ = exp(←∂_{ψ_k} →∂_{ψ̄_k}) rewritten in θ coordinates.
ContractionTable tilde_star_table(const LinearPsi& lin);

struct TildeStarReport {
  double relations_residual = 0.0;   // ψ̄⋆̃ψ, ψ⋆̃ψ, ψ̄⋆̃ψ̄, ψ⋆̃ψ̄ relations
  double brackets_residual = 0.0;    // ⋆̃ anticommutators of ψ, ψ̄
  double star_brackets_residual = 0.0;  // the same anticommutators under ⋆
  double table_difference = 0.0;     // max |ω̃ − ω| between ⋆̃ and ⋆
};

TildeStarReport tilde_star_check(const AlphaMatrix& alpha);

}  // namespace gstar
