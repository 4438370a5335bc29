#include "gstar/report.hpp"

#include <algorithm>
#include <cmath>

namespace gstar {

Check make_check(std::string id, std::string relation, double residual, double tolerance, std::string note) {
  Check c;
  c.id = std::move(id);
  c.relation = std::move(relation);
  c.residual = residual;
  c.tolerance = tolerance;
  c.pass = std::isfinite(residual) && residual <= tolerance;
  c.note = std::move(note);
  return c;
}

Check make_info(std::string id, std::string relation, double residual, std::string note) {
  Check c;
  c.id = std::move(id);
  c.relation = std::move(relation);
  c.residual = residual;
  c.pass = true;
  c.informational = true;
  c.note = std::move(note);
  return c;
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

void Report::finalize() {
  std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
}

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.informational || c.pass; });
}

const Check* Report::find(std::string_view id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

nlohmann::json to_json(const Check& c) {
  nlohmann::json j = {{"id", c.id}, {"paper_eq", c.relation}, {"residual", c.residual}, {"pass", c.pass}};
  j["tolerance"] = c.tolerance;
  if (c.informational) j["informational"] = true;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"suite", r.suite}, {"checks", checks}, {"pass", r.all_passed()}};
}

}  // namespace gstar
