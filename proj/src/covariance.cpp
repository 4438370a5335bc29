#include "gstar/covariance.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SparseCore>
#include <unsupported/Eigen/MatrixFunctions>

namespace gstar {

AlphaMatrix::AlphaMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw DomainError("alpha must be square");
  if (m_.rows() > kMaxModes) throw DimensionError("alpha: too many modes");
  for (Eigen::Index i = 0; i < m_.rows(); ++i)
    for (Eigen::Index j = 0; j < m_.cols(); ++j)
      if (m_(i, j) != -m_(j, i)) throw DomainError("alpha must be antisymmetric");
}

double BogoliubovPair::canonical_residual() const {
  const Eigen::Index n = U.rows();
  const double a = (U * V.transpose() + V * U.transpose()).cwiseAbs().maxCoeff();
  const double b = (U * U.adjoint() + V * V.adjoint() - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
  return std::max(a, b);
}

GrassmannElement lambda_symbol(const AlphaMatrix& alpha) {
  const unsigned n = alpha.modes();
  GrassmannElement out(n);
  const Matrix& a = alpha.matrix();
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= n; ++j) {
      const Complex c = a(i - 1, j - 1);
      if (c == Complex{}) continue;
      out += GrassmannElement::product_of(n, {theta_bar(i), theta_bar(j)}, c / 2.0);
      out += GrassmannElement::product_of(n, {theta(i), theta(j)}, std::conj(c) / 2.0);
    }
  }
  return out;
}

namespace {

void require_even(const GrassmannElement& lambda) {
  if (parity_of(lambda) == Parity::odd || parity_of(lambda) == Parity::mixed) {
    throw DomainError("lambda must be even");
  }
}

Eigen::VectorXcd to_vector(const GrassmannElement& a) {
  const auto v = coefficient_vector(a);
  return Eigen::Map<const Eigen::VectorXcd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

GrassmannElement from_vector(unsigned modes, const Eigen::VectorXcd& v) {
  return from_coefficient_vector(modes, std::vector<Complex>(v.data(), v.data() + v.size()));
}

}  // namespace

GrassmannElement d_lambda(const GrassmannElement& lambda, const GrassmannElement& a) {
  require_even(lambda);
  return star_commutator(lambda, a);
}

Matrix d_lambda_matrix(const GrassmannElement& lambda) {
  require_even(lambda);
  const unsigned n = lambda.modes();
  const auto table = ContractionTable::coherent(n);
  const Eigen::Index dim = Eigen::Index{1} << (2 * n);
  Matrix m = Matrix::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    const auto e = GrassmannElement::monomial(n, Monomial{static_cast<std::uint32_t>(k)});
    const auto d = star(lambda, e, table) - star(e, lambda, table);
    for (const auto& [mono, c] : d.terms()) m(mono.mask(), k) = c;
  }
  return m;
}

double d_lambda_bracket_check(const GrassmannElement& lambda1, const GrassmannElement& lambda2) {
  const Matrix d1 = d_lambda_matrix(lambda1);
  const Matrix d2 = d_lambda_matrix(lambda2);
  const Matrix d12 = d_lambda_matrix(star_commutator(lambda1, lambda2));
  return (d1 * d2 - d2 * d1 - d12).cwiseAbs().maxCoeff();
}

Matrix expm(const Matrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("expm: matrix must be square");
  if (a.rows() == 0) return a;
  return a.exp();
}

Matrix expm_times(const Matrix& a, Matrix v) {
  if (a.rows() != a.cols() || a.cols() != v.rows()) throw DimensionError("expm_times: size mismatch");
  if (v.size() == 0) return v;
  const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
  const int steps = std::max(1, static_cast<int>(std::ceil(norm)));
  const Eigen::SparseMatrix<Complex> x = (a / static_cast<double>(steps)).sparseView();
  for (int s = 0; s < steps; ++s) {
    Matrix term = v;
    for (int k = 1; k <= 40; ++k) {
      term = (x * term) / static_cast<double>(k);
      v += term;
      if (term.cwiseAbs().maxCoeff() <= 1e-18 * v.cwiseAbs().maxCoeff()) break;
    }
  }
  return v;
}

UnitaryTransform::UnitaryTransform(const GrassmannElement& lambda)
    : modes_(lambda.modes()), exp_(expm(-d_lambda_matrix(lambda))) {}

GrassmannElement UnitaryTransform::apply(const GrassmannElement& a) const {
  if (a.modes() != modes_) throw DimensionError("transform: mode mismatch");
  return from_vector(modes_, exp_ * to_vector(a));
}

GrassmannElement transform_symbol(const GrassmannElement& lambda, const GrassmannElement& a) {
  if (a.modes() != lambda.modes()) throw DimensionError("transform: mode mismatch");
  return from_vector(a.modes(), expm_times(-d_lambda_matrix(lambda), to_vector(a)).col(0));
}

namespace {

// Σ_k (−1)^k x^k / (2k + offset)!, stopped once terms fall below 1e-16 relative.
Matrix alternating_series(const Matrix& x, int offset) {
  const Eigen::Index n = x.rows();
  Matrix sum = Matrix::Identity(n, n);
  Matrix term = Matrix::Identity(n, n);
  for (int k = 1; k <= 400; ++k) {
    const double denom = static_cast<double>((2 * k + offset - 1) * (2 * k + offset));
    term = -(term * x) / denom;
    sum += term;
    const double t = term.cwiseAbs().maxCoeff();
    if (t <= 1e-16 * std::max(1.0, sum.cwiseAbs().maxCoeff())) return sum;
  }
  throw ConvergenceError("matrix power series did not converge");
}

}  // namespace

BogoliubovPair bogoliubov_from_alpha(const AlphaMatrix& alpha) {
  const Matrix& a = alpha.matrix();
  BogoliubovPair p;
  p.U = alternating_series(a * a.adjoint(), 0);
  p.V = a * alternating_series(a.adjoint() * a, 1);
  return p;
}

PsiVariables psi_variables(const GrassmannElement& lambda) {
  const unsigned n = lambda.modes();
  const Eigen::Index dim = Eigen::Index{1} << (2 * n);
  // Column k is the generator in slot k.
  Matrix generators = Matrix::Zero(dim, 2 * n);
  for (unsigned k = 0; k < 2 * n; ++k) generators(Eigen::Index{1} << k, k) = 1.0;
  const Matrix images = expm_times(-d_lambda_matrix(lambda), std::move(generators));
  PsiVariables v;
  for (unsigned i = 1; i <= n; ++i) {
    v.psi.push_back(from_vector(n, images.col(slot_of(theta(i), n))));
    v.psi_bar.push_back(from_vector(n, images.col(slot_of(theta_bar(i), n))));
  }
  return v;
}

PsiVariables psi_variables(const AlphaMatrix& alpha) { return psi_variables(lambda_symbol(alpha)); }

LinearPsi linear_parts(const PsiVariables& v) {
  const auto n = static_cast<Eigen::Index>(v.psi.size());
  LinearPsi out{Matrix::Zero(n, 2 * n), Matrix::Zero(n, 2 * n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index s = 0; s < 2 * n; ++s) {
      const Monomial m{1u << s};
      out.psi(k, s) = v.psi[k].coefficient(m);
      out.psi_bar(k, s) = v.psi_bar[k].coefficient(m);
    }
  }
  return out;
}

GrassmannElement substitute(const GrassmannElement& a, const PsiVariables& v) {
  const unsigned n = a.modes();
  if (v.psi.size() != n || v.psi_bar.size() != n) throw DimensionError("substitute: wrong number of variables");
  for (unsigned k = 0; k < n; ++k) {
    for (const auto* e : {&v.psi[k], &v.psi_bar[k]}) {
      if (e->modes() != n) throw DimensionError("substitute: mode mismatch");
      if (!e->is_zero() && parity_of(*e) != Parity::odd) throw DomainError("substitute: variables must be odd");
    }
  }
  GrassmannElement out(n);
  for (const auto& [mono, c] : a.terms()) {
    GrassmannElement prod = GrassmannElement::scalar(n, c);
    for (unsigned s = 0; s < 2 * n && !prod.is_zero(); ++s) {
      if (!mono.contains(s)) continue;
      prod = multiply(prod, s < n ? v.psi_bar[s] : v.psi[s - n]);
    }
    out += prod;
  }
  return out;
}

namespace {

GrassmannElement row_element(unsigned n, const Matrix& rows, Eigen::Index k) {
  GrassmannElement e(n);
  for (Eigen::Index s = 0; s < rows.cols(); ++s) e.add_term(Monomial{1u << s}, rows(k, s));
  return e;
}

}  // namespace

CovarianceResult check_covariance(const UnitaryTransform& t, const GrassmannElement& a) {
  const unsigned n = t.modes();
  if (a.modes() != n) throw DimensionError("check_covariance: mode mismatch");
  PsiVariables full;
  for (unsigned i = 1; i <= n; ++i) {
    full.psi.push_back(t.apply(GrassmannElement::generator(n, theta(i))));
    full.psi_bar.push_back(t.apply(GrassmannElement::generator(n, theta_bar(i))));
  }
  CovarianceResult r;
  for (unsigned k = 0; k < n; ++k) {
    for (const auto* e : {&full.psi[k], &full.psi_bar[k]}) {
      if (e->even_part().max_abs() > 1e-12) throw DomainError("transformation does not map odd generators to odd elements");
      for (const auto& [m, c] : e->terms())
        if (m.degree() > 1) r.nonlinearity = std::max(r.nonlinearity, std::abs(c));
    }
  }
  const LinearPsi lin = linear_parts(full);
  PsiVariables linear;
  for (unsigned k = 0; k < n; ++k) {
    linear.psi.push_back(row_element(n, lin.psi, k));
    linear.psi_bar.push_back(row_element(n, lin.psi_bar, k));
  }
  r.residual = max_abs_difference(t.apply(a), substitute(a, linear));
  return r;
}

CovarianceResult check_covariance(const GrassmannElement& lambda, const GrassmannElement& a) {
  return check_covariance(UnitaryTransform(lambda), a);
}

ContractionTable tilde_star_table(const LinearPsi& lin) {
  const Eigen::Index n = lin.psi.rows();
  Matrix w(2 * n, 2 * n);
  w.topRows(n) = lin.psi_bar;
  w.bottomRows(n) = lin.psi;
  const Eigen::FullPivLU<Matrix> lu(w);
  if (!lu.isInvertible()) throw DomainError("tilde star: ψ variables are not independent");
  const Matrix inv = lu.inverse();
  ContractionTable table(static_cast<unsigned>(n));
  for (Eigen::Index x = 0; x < 2 * n; ++x) {
    for (Eigen::Index y = 0; y < 2 * n; ++y) {
      Complex c{};
      for (Eigen::Index k = 0; k < n; ++k) c += inv(x, n + k) * inv(y, k);
      if (std::abs(c) > 1e-15) table.set(static_cast<unsigned>(x), static_cast<unsigned>(y), c);
    }
  }
  return table;
}

TildeStarReport tilde_star_check(const AlphaMatrix& alpha) {
  const unsigned n = alpha.modes();
  const PsiVariables v = psi_variables(alpha);
  const LinearPsi lin = linear_parts(v);
  const ContractionTable tilde = tilde_star_table(lin);
  const ContractionTable plain = ContractionTable::coherent(n);

  std::vector<GrassmannElement> psi, psi_bar;
  for (unsigned k = 0; k < n; ++k) {
    psi.push_back(row_element(n, lin.psi, k));
    psi_bar.push_back(row_element(n, lin.psi_bar, k));
  }

  TildeStarReport r;
  r.table_difference = max_weight_difference(tilde, plain);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      const auto delta = GrassmannElement::scalar(n, i == j ? 1.0 : 0.0);
      const auto upd = [](double& acc, const GrassmannElement& x, const GrassmannElement& y) {
        acc = std::max(acc, max_abs_difference(x, y));
      };
      upd(r.relations_residual, star(psi_bar[i], psi[j], tilde), multiply(psi_bar[i], psi[j]));
      upd(r.relations_residual, star(psi[i], psi[j], tilde), multiply(psi[i], psi[j]));
      upd(r.relations_residual, star(psi_bar[i], psi_bar[j], tilde), multiply(psi_bar[i], psi_bar[j]));
      upd(r.relations_residual, star(psi[i], psi_bar[j], tilde), multiply(psi[i], psi_bar[j]) + delta);

      const auto zero = GrassmannElement(n);
      for (const auto* t : {&tilde, &plain}) {
        double& acc = t == &tilde ? r.brackets_residual : r.star_brackets_residual;
        upd(acc, star(psi[i], psi[j], *t) + star(psi[j], psi[i], *t), zero);
        upd(acc, star(psi_bar[i], psi_bar[j], *t) + star(psi_bar[j], psi_bar[i], *t), zero);
        upd(acc, star(psi_bar[i], psi[j], *t) + star(psi[j], psi_bar[i], *t), delta);
      }
    }
  }
  return r;
}

}  // namespace gstar
