// Residual reports shared by the identity suites and the CLI.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace gstar {

struct Check {
  std::string id;
  std::string relation;  // human-readable identity being checked
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  /// Informational checks are reported but never fail a suite.
  bool informational = false;
  std::string note;
};

/// A check passing when residual <= tolerance (exact when tolerance is 0).
Check make_check(std::string id, std::string relation, double residual, double tolerance, std::string note = {});
/// A check that is reported but does not gate the suite.
Check make_info(std::string id, std::string relation, double residual, std::string note = {});

struct Report {
  std::string suite;
  std::vector<Check> checks;

  void add(Check c) { checks.push_back(std::move(c)); }
  void append(const Report& other);
  /// Sorts checks by id.
  void finalize();
  bool all_passed() const;
  const Check* find(std::string_view id) const;
};

nlohmann::json to_json(const Check& c);
nlohmann::json to_json(const Report& r);

}  // namespace gstar
