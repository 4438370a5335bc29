// Reference implementations used only by the tests. They share no code with
// the library beyond the value types.
//
// Fermions: Jordan-Wigner with site 1 as the outermost tensor factor (the
// library uses the opposite order); symbols do not depend on that choice.
// Bosons: truncated ladder matrices and the Voros product as a finite sum of
// derivatives.
#pragma once

#include <cmath>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "gstar/boson.hpp"
#include "gstar/grassmann.hpp"

namespace oracle {

using gstar::Complex;
using gstar::GrassmannElement;
using Mat = Eigen::MatrixXcd;

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// f⁻_site on n modes.
inline Mat annihilator(unsigned n, unsigned site) {
  Mat z = Mat::Zero(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  Mat lower = Mat::Zero(2, 2);
  lower(0, 1) = 1.0;
  Mat out = Mat::Identity(1, 1);
  for (unsigned s = 1; s <= n; ++s) out = kron(out, s < site ? z : (s == site ? lower : Mat(Mat::Identity(2, 2))));
  return out;
}

inline Mat creator(unsigned n, unsigned site) { return annihilator(n, site).adjoint(); }

/// Canonical monomial θ̄_{i1}…θ_{j1}… as the product f⁺_{i1}…f⁻_{j1}… in slot order.
inline Mat monomial_operator(unsigned n, gstar::Monomial m) {
  Mat out = Mat::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n);
  for (unsigned slot = 0; slot < 2 * n; ++slot) {
    if (((m.mask() >> slot) & 1u) == 0) continue;
    out = out * (slot < n ? creator(n, slot + 1) : annihilator(n, slot - n + 1));
  }
  return out;
}

inline Mat operator_of(const GrassmannElement& a) {
  const unsigned n = a.modes();
  Mat out = Mat::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
  for (const auto& [m, c] : a.terms()) out += c * monomial_operator(n, m);
  return out;
}

/// Normal-ordered coefficients by a least-squares fit over all monomial operators.
inline GrassmannElement symbol_of(unsigned n, const Mat& op) {
  const Eigen::Index dim = Eigen::Index{1} << (2 * n);
  Mat basis(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    const Mat m = monomial_operator(n, gstar::Monomial{static_cast<std::uint32_t>(k)});
    basis.col(k) = Eigen::Map<const Eigen::VectorXcd>(m.data(), dim);
  }
  const Eigen::VectorXcd rhs = Eigen::Map<const Eigen::VectorXcd>(op.data(), dim);
  const Eigen::VectorXcd c = basis.colPivHouseholderQr().solve(rhs);
  GrassmannElement out(n);
  for (Eigen::Index k = 0; k < dim; ++k) {
    if (c(k) != Complex{}) out.add_term(gstar::Monomial{static_cast<std::uint32_t>(k)}, c(k));
  }
  return out;
}

inline GrassmannElement star(const GrassmannElement& a, const GrassmannElement& b) {
  return oracle::symbol_of(a.modes(), oracle::operator_of(a) * oracle::operator_of(b));
}

inline double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// Bosons ----------------------------------------------------------------------

/// b⁻ on span{|0⟩ … |cutoff⟩}.
inline Mat boson_annihilator(unsigned cutoff) {
  Mat b = Mat::Zero(cutoff + 1, cutoff + 1);
  for (unsigned k = 1; k <= cutoff; ++k) b(k - 1, k) = std::sqrt(static_cast<double>(k));
  return b;
}

/// Operator of Σ c z^a z̄^b, i.e. Σ c (b⁺)^b (b⁻)^a, built in a larger space and cut back.
inline Mat boson_operator(const gstar::BosonPolynomial& p, unsigned cutoff) {
  const unsigned big = cutoff + p.degree() + 1;
  const Mat bm = boson_annihilator(big);
  const Mat bp = bm.adjoint();
  Mat out = Mat::Zero(big + 1, big + 1);
  for (const auto& [key, c] : p.terms()) {
    Mat term = Mat::Identity(big + 1, big + 1);
    for (unsigned k = 0; k < key.second; ++k) term = term * bp;
    for (unsigned k = 0; k < key.first; ++k) term = term * bm;
    out += c * term;
  }
  return out.topLeftCorner(cutoff + 1, cutoff + 1);
}

inline double falling(unsigned n, unsigned k) {
  double r = 1.0;
  for (unsigned j = 0; j < k; ++j) r *= static_cast<double>(n - j);
  return r;
}

/// p ⋆̄ q = Σ_k (1/k!) ∂_z^k p · ∂_z̄^k q.
inline gstar::BosonPolynomial voros(const gstar::BosonPolynomial& p, const gstar::BosonPolynomial& q) {
  gstar::BosonPolynomial out;
  for (const auto& [kp, cp] : p.terms())
    for (const auto& [kq, cq] : q.terms()) {
      double fact = 1.0;
      for (unsigned k = 0; k <= std::min(kp.first, kq.second); ++k) {
        if (k > 0) fact *= k;
        const double w = falling(kp.first, k) * falling(kq.second, k) / fact;
        out.add_term(kp.first - k + kq.first, kp.second + kq.second - k, cp * cq * w);
      }
    }
  return out;
}

}  // namespace oracle
