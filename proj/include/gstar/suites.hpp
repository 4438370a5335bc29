// Identity suites driven by the CLI and the C API.
#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "gstar/report.hpp"
#include "gstar/star.hpp"

namespace gstar {

/// Unknown suite name or options outside the supported range.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct SuiteOptions {
  unsigned n = 2;
  double hbar = 1.0;
  ProductKind product = ProductKind::coherent;
  unsigned cutoff = 12;
  std::uint64_t seed = 1;
  unsigned trials = 200;
};

/// Largest n accepted by the fermionic and covariance suites.
inline constexpr unsigned kMaxSuiteModes = 4;

/// Names accepted by run_suite: fermionic, covariance, oscillator
/// (alias fermion-oscillator), susy, all.
const std::vector<std::string_view>& suite_names();

/// Runs one suite; the report is sorted by check id. Throws UsageError.
Report run_suite(std::string_view name, const SuiteOptions& options);

Report fermionic_suite(const SuiteOptions& options);
Report covariance_suite(const SuiteOptions& options);
Report oscillator_suite(const SuiteOptions& options);
Report susy_suite(const SuiteOptions& options);

/// Star products of `trials` random pairs against the Fock oracle at n modes.
struct OracleComparison {
  unsigned n = 0;
  unsigned trials = 0;
  double max_residual = 0.0;
  bool pass = false;  // max_residual < 1e-12
};

OracleComparison oracle_compare(unsigned n, unsigned trials, std::uint64_t seed, StarKind kind = {});

/// The fixed quartic witness at two modes: λ = i θ̄_1θ_1θ̄_2θ_2, a = θ_1.
GrassmannElement witness_lambda();
GrassmannElement witness_argument();

}  // namespace gstar
