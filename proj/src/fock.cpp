#include "gstar/fock.hpp"

#include <array>
#include <memory>
#include <mutex>

#include <Eigen/LU>

namespace gstar {

FockOperator::FockOperator(unsigned modes, Matrix m) : modes_(modes), matrix_(std::move(m)) {
  const Eigen::Index dim = Eigen::Index{1} << modes;
  if (matrix_.rows() != dim || matrix_.cols() != dim) {
    throw DimensionError("Fock operator matrix must be 2^N x 2^N");
  }
}

FockOperator FockOperator::identity(unsigned modes) {
  const Eigen::Index dim = Eigen::Index{1} << modes;
  return {modes, Matrix::Identity(dim, dim)};
}

FockOperator FockOperator::zero(unsigned modes) {
  const Eigen::Index dim = Eigen::Index{1} << modes;
  return {modes, Matrix::Zero(dim, dim)};
}

namespace {

void require_same(const FockOperator& a, const FockOperator& b) {
  if (a.modes() != b.modes()) throw DimensionError("Fock operators act on different mode counts");
}

}  // namespace

FockOperator operator*(const FockOperator& a, const FockOperator& b) {
  require_same(a, b);
  return {a.modes_, a.matrix_ * b.matrix_};
}

FockOperator operator+(const FockOperator& a, const FockOperator& b) {
  require_same(a, b);
  return {a.modes_, a.matrix_ + b.matrix_};
}

FockOperator operator-(const FockOperator& a, const FockOperator& b) {
  require_same(a, b);
  return {a.modes_, a.matrix_ - b.matrix_};
}

double max_abs_difference(const FockOperator& a, const FockOperator& b) {
  require_same(a, b);
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

FockOperator ladder(unsigned modes, unsigned site, Ladder kind) {
  if (site < 1 || site > modes) throw DimensionError("ladder: site out of range");
  const Eigen::Index dim = Eigen::Index{1} << modes;
  const unsigned bit = 1u << (site - 1);
  Matrix m = Matrix::Zero(dim, dim);
  for (unsigned n = 0; n < static_cast<unsigned>(dim); ++n) {
    const bool occupied = n & bit;
    if (occupied != (kind == Ladder::annihilate)) continue;
    const double sign = detail::sign_of(static_cast<unsigned>(std::popcount(n & (bit - 1))));
    m(n ^ bit, n) = sign;
  }
  return {modes, std::move(m)};
}

namespace {

// Real basis matrices f⁺^n f⁻^m for every monomial, and the factorization of
// the 4^N x 4^N system that expresses an operator in that basis.
struct NormalBasis {
  unsigned modes = 0;
  std::vector<Eigen::MatrixXd> operators;
  Eigen::FullPivLU<Eigen::MatrixXd> lu;
};

Eigen::MatrixXd basis_operator(unsigned modes, Monomial mono) {
  const Eigen::Index dim = Eigen::Index{1} << modes;
  Eigen::MatrixXd r = Eigen::MatrixXd::Identity(dim, dim);
  for (unsigned s = 0; s < 2 * modes; ++s) {
    if (!mono.contains(s)) continue;
    const auto g = generator_at(s, modes);
    const auto kind = g.kind == GeneratorKind::bar ? Ladder::create : Ladder::annihilate;
    r = r * ladder(modes, g.site, kind).matrix().real();
  }
  return r;
}

std::unique_ptr<NormalBasis> build_basis(unsigned modes) {
  auto b = std::make_unique<NormalBasis>();
  b->modes = modes;
  const std::size_t count = std::size_t{1} << (2 * modes);
  const Eigen::Index dim = Eigen::Index{1} << modes;
  Eigen::MatrixXd system(dim * dim, static_cast<Eigen::Index>(count));
  b->operators.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    b->operators.push_back(basis_operator(modes, Monomial{static_cast<std::uint32_t>(k)}));
    system.col(static_cast<Eigen::Index>(k)) = b->operators.back().reshaped();
  }
  b->lu.compute(system);
  if (b->lu.rank() != static_cast<Eigen::Index>(count)) {
    throw Error("internal: normal-ordered operator basis is not independent");
  }
  return b;
}

const NormalBasis& basis_for(unsigned modes) {
  if (modes > kMaxOracleModes) throw DimensionError("Fock oracle supports at most 5 modes");
  static std::array<std::once_flag, kMaxOracleModes + 1> flags;
  static std::array<std::unique_ptr<NormalBasis>, kMaxOracleModes + 1> cache;
  std::call_once(flags[modes], [&] { cache[modes] = build_basis(modes); });
  return *cache[modes];
}

}  // namespace

NormalOrderCoefficients normal_order_decompose(const FockOperator& a) {
  const auto& basis = basis_for(a.modes());
  const Eigen::VectorXd re = basis.lu.solve(Eigen::VectorXd(a.matrix().real().reshaped()));
  const Eigen::VectorXd im = basis.lu.solve(Eigen::VectorXd(a.matrix().imag().reshaped()));
  NormalOrderCoefficients out;
  for (Eigen::Index k = 0; k < re.size(); ++k) {
    const Complex c(re[k], im[k]);
    if (c != Complex{}) out.emplace(Monomial{static_cast<std::uint32_t>(k)}, c);
  }
  return out;
}

FockOperator reconstruct(unsigned modes, const NormalOrderCoefficients& c) {
  const auto& basis = basis_for(modes);
  FockOperator out = FockOperator::zero(modes);
  Matrix m = out.matrix();
  for (const auto& [mono, coeff] : c) m += coeff * basis.operators.at(mono.mask()).cast<Complex>();
  return {modes, std::move(m)};
}

GrassmannElement symbol_of(const FockOperator& a) {
  GrassmannElement out(a.modes());
  for (const auto& [m, c] : normal_order_decompose(a)) out.add_term(m, c);
  return out;
}

FockOperator operator_of(const GrassmannElement& a) {
  return reconstruct(a.modes(), NormalOrderCoefficients(a.terms().begin(), a.terms().end()));
}

GrassmannElement oracle_star(const GrassmannElement& a, const GrassmannElement& b) {
  if (a.modes() != b.modes()) throw DimensionError("oracle_star: mode mismatch");
  return symbol_of(operator_of(a) * operator_of(b));
}

GrassmannOperator::GrassmannOperator(unsigned fock_modes, unsigned grassmann_modes)
    : fock_modes_(fock_modes),
      grassmann_modes_(grassmann_modes),
      entries_((std::size_t{1} << fock_modes) * (std::size_t{1} << fock_modes), GrassmannElement(grassmann_modes)) {}

GrassmannOperator GrassmannOperator::from_fock(const FockOperator& f, unsigned grassmann_modes) {
  GrassmannOperator out(f.modes(), grassmann_modes);
  for (std::size_t r = 0; r < out.dimension(); ++r)
    for (std::size_t c = 0; c < out.dimension(); ++c)
      out.at(r, c) = GrassmannElement::scalar(grassmann_modes, f.matrix()(static_cast<Eigen::Index>(r),
                                                                          static_cast<Eigen::Index>(c)));
  return out;
}

GrassmannOperator operator*(const GrassmannElement& g, const GrassmannOperator& op) {
  GrassmannOperator out = op;
  for (auto& e : out.entries_) e = multiply(g, e);
  return out;
}

GrassmannOperator operator*(const GrassmannOperator& a, const GrassmannOperator& b) {
  if (a.fock_modes_ != b.fock_modes_ || a.grassmann_modes_ != b.grassmann_modes_) {
    throw DimensionError("Grassmann operator shapes differ");
  }
  const std::size_t dim = a.dimension();
  GrassmannOperator out(a.fock_modes_, a.grassmann_modes_);
  std::vector<GrassmannElement> even(b.entries_.size()), odd(b.entries_.size());
  for (std::size_t k = 0; k < b.entries_.size(); ++k) {
    even[k] = b.entries_[k].even_part();
    odd[k] = b.entries_[k].odd_part();
  }
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t k = 0; k < dim; ++k) {
      const auto& left = a.at(r, k);
      if (left.is_zero()) continue;
      const bool flip = (std::popcount(r) + std::popcount(k)) & 1;
      for (std::size_t c = 0; c < dim; ++c) {
        const auto& bo = odd[k * dim + c];
        GrassmannElement right = even[k * dim + c];
        if (flip) right -= bo; else right += bo;
        if (right.is_zero()) continue;
        out.at(r, c) += multiply(left, right);
      }
    }
  }
  return out;
}

GrassmannOperator operator+(const GrassmannOperator& a, const GrassmannOperator& b) {
  if (a.fock_modes_ != b.fock_modes_ || a.grassmann_modes_ != b.grassmann_modes_) {
    throw DimensionError("Grassmann operator shapes differ");
  }
  GrassmannOperator out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] += b.entries_[k];
  return out;
}

GrassmannOperator GrassmannOperator::scaled(Complex c) const {
  GrassmannOperator out = *this;
  for (auto& e : out.entries_) e *= c;
  return out;
}

bool GrassmannOperator::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

GrassmannOperator exp_nilpotent(const GrassmannOperator& x, unsigned max_terms) {
  GrassmannOperator sum = GrassmannOperator::from_fock(FockOperator::identity(x.fock_modes()), x.grassmann_modes());
  GrassmannOperator term = sum;
  for (unsigned k = 1; k <= max_terms; ++k) {
    term = (term * x).scaled(1.0 / k);
    if (term.is_zero()) return sum;
    sum = sum + term;
  }
  throw ConvergenceError("Grassmann operator exponential: powers did not vanish");
}

std::vector<GrassmannElement> coherent_ket(unsigned fock_modes, unsigned grassmann_modes, unsigned site_offset) {
  if (fock_modes + site_offset > grassmann_modes) throw DimensionError("coherent_ket: not enough Grassmann modes");
  GrassmannElement exponent(grassmann_modes);
  for (unsigned i = 1; i <= fock_modes; ++i) {
    exponent -= GrassmannElement::product_of(grassmann_modes,
                                             {theta_bar(i + site_offset), theta(i + site_offset)}, 0.5);
  }
  const GrassmannElement gauss = exp_nilpotent(exponent);
  std::vector<GrassmannElement> out;
  out.reserve(std::size_t{1} << fock_modes);
  for (unsigned n = 0; n < (1u << fock_modes); ++n) {
    std::vector<GeneratorIndex> gens;
    for (unsigned i = fock_modes; i >= 1; --i)
      if (n & (1u << (i - 1))) gens.push_back(theta(i + site_offset));
    out.push_back(multiply(gauss, GrassmannElement::product_of(grassmann_modes, gens)));
  }
  return out;
}

std::vector<GrassmannElement> coherent_bra(unsigned fock_modes, unsigned grassmann_modes, unsigned site_offset) {
  auto out = coherent_ket(fock_modes, grassmann_modes, site_offset);
  for (auto& c : out) c = involution(c);
  return out;
}

OverlapReport coherent_overlap_check(unsigned modes) {
  if (modes > kMaxOracleModes) throw DimensionError("coherent_overlap_check supports at most 5 modes");
  OverlapReport rep;
  rep.modes = modes;
  const std::size_t dim = std::size_t{1} << modes;

  // ∫ dμ(η) |η⟩⟨η| = 1
  {
    const auto ket = coherent_ket(modes, modes);
    const auto bra = coherent_bra(modes, modes);
    std::vector<unsigned> sites(modes);
    for (unsigned i = 0; i < modes; ++i) sites[i] = i + 1;
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) {
        const auto v = berezin_integrate_measure(sites, multiply(ket[r], bra[c]));
        const auto expected = GrassmannElement::scalar(modes, r == c ? 1.0 : 0.0);
        rep.identity_residual = std::max(rep.identity_residual, max_abs_difference(v, expected));
      }
    }
  }

  // ⟨θ|η⟩⟨η|θ⟩ = exp(-Σ (η̄ - θ̄)(η - θ)), θ on sites 1..N and η on N+1..2N
  if (modes > 0) {
    const unsigned big = 2 * modes;
    const auto ket_t = coherent_ket(modes, big, 0);
    const auto bra_t = coherent_bra(modes, big, 0);
    const auto ket_e = coherent_ket(modes, big, modes);
    const auto bra_e = coherent_bra(modes, big, modes);
    GrassmannElement te(big), et(big);
    for (std::size_t n = 0; n < dim; ++n) {
      te += multiply(bra_t[n], ket_e[n]);
      et += multiply(bra_e[n], ket_t[n]);
    }
    GrassmannElement exponent(big);
    for (unsigned i = 1; i <= modes; ++i) {
      const auto d_bar = GrassmannElement::generator(big, theta_bar(i + modes)) -
                         GrassmannElement::generator(big, theta_bar(i));
      const auto d = GrassmannElement::generator(big, theta(i + modes)) - GrassmannElement::generator(big, theta(i));
      exponent -= multiply(d_bar, d);
    }
    rep.overlap_residual = max_abs_difference(multiply(te, et), exp_nilpotent(exponent));
  }

  // ⟨θ|A|θ⟩ reproduces the normal-ordered symbol on every basis operator
  {
    const auto ket = coherent_ket(modes, modes);
    const auto bra = coherent_bra(modes, modes);
    const std::size_t count = std::size_t{1} << (2 * modes);
    for (std::size_t k = 0; k < count; ++k) {
      const auto mono = GrassmannElement::monomial(modes, Monomial{static_cast<std::uint32_t>(k)});
      const FockOperator op = operator_of(mono);
      GrassmannElement sym(modes);
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) {
          const Complex a = op.matrix()(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
          if (a != Complex{}) sym += multiply(bra[r], ket[c]) * a;
        }
      rep.symbol_residual = std::max(rep.symbol_residual, max_abs_difference(sym, mono));
    }
  }

  rep.pass = rep.identity_residual == 0.0 && rep.overlap_residual == 0.0 && rep.symbol_residual == 0.0;
  return rep;
}

}  // namespace gstar
