// Bosonic oscillator symbols under the Voros product ⋆̄ = exp(←∂_z →∂_z̄).
//
// Two representations:
//   BosonPolynomial  Σ c_ab z^a z̄^b, exact. z^a z̄^b is the symbol of (b⁺)^b (b⁻)^a.
//   FockSymbol       Σ c_mn Φ_mn with Φ_mn = e^{−zz̄} z̄^m z^n / √(m! n!), the symbol
//                    of |m⟩⟨n|, truncated at a cutoff. c is the operator matrix.
//
// Truncated matrix products are only exact on a leading block. Every
// FockSymbol records the largest index through which its entries are exact,
// and how far it moves occupation numbers up (raise) and down (lower).
#pragma once

#include <map>
#include <utility>

#include <Eigen/Dense>
#include <json.hpp>

#include "gstar/grassmann.hpp"
#include "gstar/report.hpp"

namespace gstar {

inline constexpr unsigned kDefaultCutoff = 12;

class BosonPolynomial {
 public:
  using Key = std::pair<unsigned, unsigned>;  // (power of z, power of z̄)
  using Terms = std::map<Key, Complex>;

  BosonPolynomial() = default;

  static BosonPolynomial constant(Complex c);
  static BosonPolynomial monomial(unsigned a, unsigned b, Complex c = 1.0);
  static BosonPolynomial z() { return monomial(1, 0); }
  static BosonPolynomial zbar() { return monomial(0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Complex coefficient(unsigned a, unsigned b) const;
  void add_term(unsigned a, unsigned b, Complex c);
  /// Largest a + b, 0 for the zero polynomial.
  unsigned degree() const;
  double max_abs() const;

  /// Σ c z^a z̄^b at the point z.
  Complex evaluate(Complex z) const;

  BosonPolynomial& operator+=(const BosonPolynomial& o);
  BosonPolynomial& operator-=(const BosonPolynomial& o);
  BosonPolynomial& operator*=(Complex c);
  friend BosonPolynomial operator+(BosonPolynomial a, const BosonPolynomial& b) { return a += b; }
  friend BosonPolynomial operator-(BosonPolynomial a, const BosonPolynomial& b) { return a -= b; }
  friend BosonPolynomial operator*(BosonPolynomial a, Complex c) { return a *= c; }
  friend bool operator==(const BosonPolynomial&, const BosonPolynomial&) = default;

 private:
  Terms terms_;
};

/// Ordinary commutative product.
BosonPolynomial multiply(const BosonPolynomial& p, const BosonPolynomial& q);
BosonPolynomial voros_star_poly(const BosonPolynomial& p, const BosonPolynomial& q);
/// Complex conjugation of the function: c z^a z̄^b → conj(c) z^b z̄^a.
BosonPolynomial involution(const BosonPolynomial& p);
double max_abs_difference(const BosonPolynomial& p, const BosonPolynomial& q);
std::string to_string(const BosonPolynomial& p);

class FockSymbol {
 public:
  FockSymbol() = default;
  /// A matrix known exactly on every index.
  FockSymbol(unsigned cutoff, Eigen::MatrixXcd c);

  static FockSymbol zero(unsigned cutoff);
  /// Φ_mn.
  static FockSymbol basis(unsigned cutoff, unsigned m, unsigned n, Complex c = 1.0);
  static FockSymbol from_polynomial(const BosonPolynomial& p, unsigned cutoff);

  unsigned cutoff() const { return cutoff_; }
  const Eigen::MatrixXcd& matrix() const { return c_; }
  Complex coefficient(unsigned m, unsigned n) const { return c_(m, n); }
  /// Entries with both indices at most this value are exact; -1 if none are.
  int exact_through() const { return exact_; }
  int raise() const { return raise_; }
  int lower() const { return lower_; }

  /// Σ c_mn Φ_mn(z) over the stored (truncated) coefficients.
  Complex evaluate(Complex z) const;
  /// Operator adjoint, i.e. complex conjugation of the function.
  FockSymbol adjoint() const;

  FockSymbol& operator+=(const FockSymbol& o);
  FockSymbol& operator-=(const FockSymbol& o);
  FockSymbol& operator*=(Complex c);
  friend FockSymbol operator+(FockSymbol a, const FockSymbol& b) { return a += b; }
  friend FockSymbol operator-(FockSymbol a, const FockSymbol& b) { return a -= b; }
  friend FockSymbol operator*(FockSymbol a, Complex c) { return a *= c; }

  friend FockSymbol fock_star(const FockSymbol& x, const FockSymbol& y);

 private:
  void merge_bounds(const FockSymbol& o);

  unsigned cutoff_ = 0;
  Eigen::MatrixXcd c_;
  int exact_ = -1;
  int raise_ = 0;
  int lower_ = 0;
};

/// Max entry difference on the block where both operands are exact. Throws
/// DimensionError on a cutoff mismatch.
double max_exact_difference(const FockSymbol& x, const FockSymbol& y);

nlohmann::json to_json(const FockSymbol& s);
FockSymbol fock_symbol_from_json(const nlohmann::json& j);

/// z ⋆̄ Φ00 = Φ00 ⋆̄ z̄ = 0.
Report star_vacuum_check(unsigned cutoff = kDefaultCutoff);

/// Ladder, eigen and product relations of the Φ_mn, and polynomial versus
/// truncated-Fock agreement of ⋆̄ on random polynomials of degree ≤ max_degree.
Report boson_relations_check(unsigned cutoff, unsigned trials, std::uint64_t seed, unsigned max_degree = 4);

}  // namespace gstar
