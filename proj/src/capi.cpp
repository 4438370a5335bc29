#include "gstar/gstar.h"

#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "gstar/covariance.hpp"
#include "gstar/expr.hpp"
#include "gstar/suites.hpp"

struct gstar_element {
  static constexpr std::uint32_t kMagic = 0x67537472;  // "gStr"
  std::uint32_t magic = kMagic;
  gstar::Value value;
};

namespace {

thread_local std::string last_error;

int fail(int status, const std::string& message) {
  last_error = message;
  return status;
}

// Maps the library's exception types onto status codes.
template <class F>
int guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const gstar::ParseError& e) {
    return fail(GSTAR_PARSE, e.what());
  } catch (const gstar::UsageError& e) {
    return fail(GSTAR_INVALID_ARGUMENT, e.what());
  } catch (const gstar::DimensionError& e) {
    return fail(GSTAR_DIMENSION, e.what());
  } catch (const gstar::DomainError& e) {
    return fail(GSTAR_DOMAIN, e.what());
  } catch (const gstar::ConvergenceError& e) {
    return fail(GSTAR_NOT_CONVERGED, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(GSTAR_INVALID_ARGUMENT, std::string("JSON: ") + e.what());
  } catch (const std::bad_alloc&) {
    return fail(GSTAR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GSTAR_INTERNAL, e.what());
  } catch (...) {
    return fail(GSTAR_INTERNAL, "unknown exception");
  }
}

char* duplicate(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool valid(const gstar_element* e) { return e != nullptr && e->magic == gstar_element::kMagic; }

gstar_options defaults() {
  gstar_options o;
  gstar_options_default(&o);
  return o;
}

gstar::ProductKind product_of(const gstar_options& o) {
  switch (o.product) {
    case GSTAR_PRODUCT_COHERENT: return gstar::ProductKind::coherent;
    case GSTAR_PRODUCT_SYMMETRIC: return gstar::ProductKind::symmetric;
    default: throw gstar::UsageError("unknown product kind " + std::to_string(o.product));
  }
}

gstar::EvalConfig eval_config(const gstar_options& o) {
  gstar::EvalConfig c;
  c.n = o.n;
  c.hbar = o.hbar;
  switch (o.sector) {
    case GSTAR_SECTOR_AUTO: c.sector = gstar::Sector::automatic; break;
    case GSTAR_SECTOR_FERMIONIC: c.sector = gstar::Sector::fermionic; break;
    case GSTAR_SECTOR_SUPER: c.sector = gstar::Sector::super; break;
    default: throw gstar::UsageError("unknown sector " + std::to_string(o.sector));
  }
  if (!(o.hbar >= 0.0)) throw gstar::UsageError("hbar must be >= 0");
  return c;
}

gstar::SuiteOptions suite_options(const gstar_options& o) {
  gstar::SuiteOptions s;
  s.n = o.n;
  s.hbar = o.hbar;
  s.product = product_of(o);
  s.cutoff = o.cutoff;
  s.seed = o.seed;
  s.trials = o.trials;
  return s;
}

gstar_element* wrap(gstar::Value v) { return new gstar_element{gstar_element::kMagic, std::move(v)}; }

nlohmann::json matrix_json(const gstar::Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

// Entries are numbers or [re, im] pairs.
gstar::Matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw gstar::DomainError("alpha must be a non-empty square array");
  const auto n = static_cast<Eigen::Index>(j.size());
  gstar::Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw gstar::DomainError("alpha must be a square array");
    }
    for (Eigen::Index k = 0; k < n; ++k) {
      const auto& e = row[static_cast<std::size_t>(k)];
      if (e.is_number()) {
        m(i, k) = e.get<double>();
      } else if (e.is_array() && e.size() == 2) {
        m(i, k) = gstar::Complex(e[0].get<double>(), e[1].get<double>());
      } else {
        throw gstar::DomainError("alpha entries are numbers or [re, im] pairs");
      }
    }
  }
  return m;
}

}  // namespace

extern "C" {

void gstar_options_default(gstar_options* out) {
  if (out == nullptr) return;
  out->n = 1;
  out->hbar = 1.0;
  out->product = GSTAR_PRODUCT_COHERENT;
  out->sector = GSTAR_SECTOR_AUTO;
  out->cutoff = 12;
  out->seed = 1;
  out->trials = 200;
}

const char* gstar_last_error(void) { return last_error.c_str(); }

const char* gstar_status_name(int status) {
  switch (status) {
    case GSTAR_OK: return "ok";
    case GSTAR_INVALID_ARGUMENT: return "invalid argument";
    case GSTAR_DIMENSION: return "dimension mismatch";
    case GSTAR_PARSE: return "parse error";
    case GSTAR_DOMAIN: return "domain error";
    case GSTAR_NOT_CONVERGED: return "not converged";
    case GSTAR_NULL_POINTER: return "null pointer";
    case GSTAR_INTERNAL: return "internal error";
    default: return "unknown status";
  }
}

void gstar_string_free(char* s) { delete[] s; }

int gstar_element_parse(const char* source, const gstar_options* options, gstar_element** out) {
  if (source == nullptr || out == nullptr) return fail(GSTAR_NULL_POINTER, "null argument");
  *out = nullptr;
  return guarded([&] {
    const auto o = options ? *options : defaults();
    *out = wrap(gstar::evaluate(source, eval_config(o)));
    return GSTAR_OK;
  });
}

int gstar_element_from_json(const char* json, gstar_element** out) {
  if (json == nullptr || out == nullptr) return fail(GSTAR_NULL_POINTER, "null argument");
  *out = nullptr;
  return guarded([&] {
    const auto j = nlohmann::json::parse(json);
    if (j.is_object() && j.contains("representation")) {
      *out = wrap(gstar::super_symbol_from_json(j));
    } else {
      *out = wrap(gstar::grassmann_from_json(j));
    }
    return GSTAR_OK;
  });
}

int gstar_element_to_json(const gstar_element* e, char** out) {
  if (!valid(e) || out == nullptr) return fail(GSTAR_NULL_POINTER, "null or invalid element");
  *out = nullptr;
  return guarded([&] {
    *out = duplicate(gstar::to_json(e->value).dump());
    return GSTAR_OK;
  });
}

int gstar_element_to_text(const gstar_element* e, char** out) {
  if (!valid(e) || out == nullptr) return fail(GSTAR_NULL_POINTER, "null or invalid element");
  *out = nullptr;
  return guarded([&] {
    *out = duplicate(gstar::to_string(e->value));
    return GSTAR_OK;
  });
}

int gstar_element_modes(const gstar_element* e, unsigned* out) {
  if (!valid(e) || out == nullptr) return fail(GSTAR_NULL_POINTER, "null or invalid element");
  const auto* g = std::get_if<gstar::GrassmannElement>(&e->value);
  *out = g ? g->modes() : 1;
  return GSTAR_OK;
}

int gstar_element_is_super(const gstar_element* e, int* out) {
  if (!valid(e) || out == nullptr) return fail(GSTAR_NULL_POINTER, "null or invalid element");
  *out = std::holds_alternative<gstar::SuperSymbol>(e->value) ? 1 : 0;
  return GSTAR_OK;
}

void gstar_element_destroy(gstar_element* e) {
  if (!valid(e)) return;
  e->magic = 0;
  delete e;
}

int gstar_star(const gstar_element* a, const gstar_element* b, const gstar_options* options, gstar_element** out) {
  if (!valid(a) || !valid(b) || out == nullptr) return fail(GSTAR_NULL_POINTER, "null or invalid argument");
  *out = nullptr;
  return guarded([&] {
    const auto o = options ? *options : defaults();
    const auto* ga = std::get_if<gstar::GrassmannElement>(&a->value);
    const auto* gb = std::get_if<gstar::GrassmannElement>(&b->value);
    if (ga && gb) {
      if (!(o.hbar >= 0.0)) throw gstar::UsageError("hbar must be >= 0");
      *out = wrap(gstar::star(*ga, *gb, gstar::StarKind{product_of(o), o.hbar}));
    } else if (!ga && !gb) {
      *out = wrap(gstar::super_star(std::get<gstar::SuperSymbol>(a->value), std::get<gstar::SuperSymbol>(b->value)));
    } else {
      throw gstar::DimensionError("cannot multiply a Grassmann element with a super symbol");
    }
    return GSTAR_OK;
  });
}

int gstar_eval(const char* source, const gstar_options* options, char** json_out) {
  if (source == nullptr || json_out == nullptr) return fail(GSTAR_NULL_POINTER, "null argument");
  *json_out = nullptr;
  return guarded([&] {
    const auto o = options ? *options : defaults();
    const auto v = gstar::evaluate(source, eval_config(o));
    const nlohmann::json j{{"text", gstar::to_string(v)}, {"value", gstar::to_json(v)}};
    *json_out = duplicate(j.dump());
    return GSTAR_OK;
  });
}

int gstar_check(const char* suite, const gstar_options* options, char** json_out, int* all_passed) {
  if (suite == nullptr || json_out == nullptr || all_passed == nullptr) {
    return fail(GSTAR_NULL_POINTER, "null argument");
  }
  *json_out = nullptr;
  *all_passed = 0;
  return guarded([&] {
    const auto o = options ? *options : defaults();
    const auto report = gstar::run_suite(suite, suite_options(o));
    *json_out = duplicate(gstar::to_json(report).dump());
    *all_passed = report.all_passed() ? 1 : 0;
    return GSTAR_OK;
  });
}

int gstar_bogoliubov(const char* alpha_json, const char* element_json, char** json_out) {
  if (alpha_json == nullptr || json_out == nullptr) return fail(GSTAR_NULL_POINTER, "null argument");
  *json_out = nullptr;
  return guarded([&] {
    const gstar::AlphaMatrix alpha(matrix_from_json(nlohmann::json::parse(alpha_json)));
    const auto bp = gstar::bogoliubov_from_alpha(alpha);
    nlohmann::json j{{"U", matrix_json(bp.U)}, {"V", matrix_json(bp.V)}, {"canonical_residual", bp.canonical_residual()}};
    j["covariance_residual"] = nullptr;
    if (element_json != nullptr) {
      const auto a = gstar::grassmann_from_json(nlohmann::json::parse(element_json));
      if (a.modes() != alpha.modes()) throw gstar::DimensionError("element and alpha have different mode counts");
      j["covariance_residual"] = gstar::check_covariance(gstar::lambda_symbol(alpha), a).residual;
    }
    *json_out = duplicate(j.dump());
    return GSTAR_OK;
  });
}

int gstar_oracle_compare(const gstar_options* options, char** json_out, int* pass) {
  if (json_out == nullptr || pass == nullptr) return fail(GSTAR_NULL_POINTER, "null argument");
  *json_out = nullptr;
  *pass = 0;
  return guarded([&] {
    const auto o = options ? *options : defaults();
    if (!(o.hbar >= 0.0)) throw gstar::UsageError("hbar must be >= 0");
    const auto r = gstar::oracle_compare(o.n, o.trials, o.seed, {product_of(o), o.hbar});
    const nlohmann::json j{{"n", r.n}, {"max_residual", r.max_residual}, {"trials", r.trials}, {"pass", r.pass}};
    *json_out = duplicate(j.dump());
    *pass = r.pass ? 1 : 0;
    return GSTAR_OK;
  });
}

}  // extern "C"
