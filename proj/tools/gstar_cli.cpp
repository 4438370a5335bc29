// gstar: evaluate symbols, take star products and run the identity suites.
// Exit codes: 0 pass, 1 check failure, 2 usage error.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gstar/gstar.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

constexpr double kResidualLimit = 1e-10;

struct StringDeleter {
  void operator()(char* s) const { gstar_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct ElementDeleter {
  void operator()(gstar_element* e) const { gstar_element_destroy(e); }
};
using OwnedElement = std::unique_ptr<gstar_element, ElementDeleter>;

int report_error(int status) {
  std::cerr << "gstar: " << gstar_status_name(status) << ": " << gstar_last_error() << "\n";
  return kExitUsage;
}

// Inline JSON is used as is; anything else names a file.
bool load_json_argument(const std::string& arg, std::string& out) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{')) {
    out = arg;
    return true;
  }
  std::ifstream in(arg);
  if (!in) {
    std::cerr << "gstar: cannot read '" << arg << "'\n";
    return false;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

void print_report(const nlohmann::json& report) {
  for (const auto& c : report.at("checks")) {
    const bool info = c.value("informational", false);
    const char* tag = info ? "INFO" : (c.at("pass").get<bool>() ? "PASS" : "FAIL");
    std::printf("%-4s %-44s residual=%-12.4g tol=%-8.2g %s\n", tag, c.at("id").get<std::string>().c_str(),
                c.at("residual").get<double>(), c.at("tolerance").get<double>(),
                c.at("paper_eq").get<std::string>().c_str());
    if (c.contains("note")) std::printf("     %s\n", c.at("note").get<std::string>().c_str());
  }
  std::printf("%s: %s\n", report.at("suite").get<std::string>().c_str(),
              report.at("pass").get<bool>() ? "pass" : "FAIL");
}

}  // namespace

int main(int argc, char** argv) {
  gstar_options opts;
  gstar_options_default(&opts);
  opts.n = 2;

  CLI::App app{"Grassmann star products, symbols and identity checks"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string product = "coherent";
  std::string sector = "auto";
  bool json = false;
  app.add_option("--n", opts.n, "number of fermionic modes")->capture_default_str();
  app.add_option("--hbar", opts.hbar, "deformation parameter")->capture_default_str();
  app.add_option("--product", product, "coherent or symmetric")
      ->check(CLI::IsMember({"coherent", "symmetric"}))
      ->capture_default_str();
  app.add_option("--cutoff", opts.cutoff, "bosonic Fock cutoff")->capture_default_str();
  app.add_option("--seed", opts.seed, "random seed")->capture_default_str();
  app.add_option("--trials", opts.trials, "random trials per check")->capture_default_str();
  app.add_flag("--json", json, "print JSON");

  auto* eval = app.add_subcommand("eval", "evaluate an expression");
  std::string expr;
  eval->add_option("expr", expr, "expression, e.g. \"t1 @ tb1\"")->required();
  eval->add_option("--sector", sector, "auto, fermionic or super")
      ->check(CLI::IsMember({"auto", "fermionic", "super"}));

  auto* star = app.add_subcommand("star", "star product of two expressions");
  std::string lhs;
  std::string rhs;
  star->add_option("a", lhs, "left factor")->required();
  star->add_option("b", rhs, "right factor")->required();
  star->add_option("--sector", sector, "auto, fermionic or super")
      ->check(CLI::IsMember({"auto", "fermionic", "super"}));

  auto* check = app.add_subcommand("check", "run an identity suite");
  std::string suite;
  check->add_option("suite", suite, "fermionic, covariance, oscillator, fermion-oscillator, susy or all")->required();

  auto* bogo = app.add_subcommand("bogoliubov", "Bogoliubov matrices for an antisymmetric alpha");
  std::string alpha_arg;
  std::string element_arg;
  bogo->add_option("--alpha", alpha_arg, "N x N JSON array, inline or a file")->required();
  bogo->add_option("--check-covariance", element_arg, "element JSON, inline or a file");

  app.add_subcommand("oracle-compare", "compare star products against the Fock oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  opts.product = product == "symmetric" ? GSTAR_PRODUCT_SYMMETRIC : GSTAR_PRODUCT_COHERENT;
  opts.sector = sector == "fermionic" ? GSTAR_SECTOR_FERMIONIC
                : sector == "super"   ? GSTAR_SECTOR_SUPER
                                      : GSTAR_SECTOR_AUTO;

  auto print_element = [&](const gstar_element* e) {
    char* out = nullptr;
    const int status = json ? gstar_element_to_json(e, &out) : gstar_element_to_text(e, &out);
    if (status != GSTAR_OK) return report_error(status);
    OwnedString owned(out);
    std::cout << owned.get() << "\n";
    return kExitPass;
  };

  if (eval->parsed()) {
    gstar_element* e = nullptr;
    if (const int status = gstar_element_parse(expr.c_str(), &opts, &e); status != GSTAR_OK) {
      return report_error(status);
    }
    OwnedElement owned(e);
    return print_element(e);
  }

  if (star->parsed()) {
    gstar_element* a = nullptr;
    gstar_element* b = nullptr;
    if (const int status = gstar_element_parse(lhs.c_str(), &opts, &a); status != GSTAR_OK) return report_error(status);
    OwnedElement oa(a);
    if (const int status = gstar_element_parse(rhs.c_str(), &opts, &b); status != GSTAR_OK) return report_error(status);
    OwnedElement ob(b);
    gstar_element* p = nullptr;
    if (const int status = gstar_star(a, b, &opts, &p); status != GSTAR_OK) return report_error(status);
    OwnedElement op(p);
    return print_element(p);
  }

  if (check->parsed()) {
    char* out = nullptr;
    int passed = 0;
    if (const int status = gstar_check(suite.c_str(), &opts, &out, &passed); status != GSTAR_OK) {
      return report_error(status);
    }
    OwnedString owned(out);
    if (json) {
      std::cout << nlohmann::json::parse(owned.get()).dump(2) << "\n";
    } else {
      print_report(nlohmann::json::parse(owned.get()));
    }
    return passed ? kExitPass : kExitFail;
  }

  if (bogo->parsed()) {
    std::string alpha;
    std::string element;
    if (!load_json_argument(alpha_arg, alpha)) return kExitUsage;
    if (!element_arg.empty() && !load_json_argument(element_arg, element)) return kExitUsage;
    char* out = nullptr;
    const int status = gstar_bogoliubov(alpha.c_str(), element_arg.empty() ? nullptr : element.c_str(), &out);
    if (status != GSTAR_OK) return report_error(status);
    OwnedString owned(out);
    const auto j = nlohmann::json::parse(owned.get());
    std::cout << j.dump(json ? 2 : -1) << "\n";
    bool ok = j.at("canonical_residual").get<double>() <= kResidualLimit;
    if (!j.at("covariance_residual").is_null()) ok = ok && j.at("covariance_residual").get<double>() <= kResidualLimit;
    return ok ? kExitPass : kExitFail;
  }

  char* out = nullptr;
  int passed = 0;
  if (const int status = gstar_oracle_compare(&opts, &out, &passed); status != GSTAR_OK) return report_error(status);
  OwnedString owned(out);
  std::cout << nlohmann::json::parse(owned.get()).dump(json ? 2 : -1) << "\n";
  return passed ? kExitPass : kExitFail;
}
