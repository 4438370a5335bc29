#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include <json.hpp>

#include "gstar/gstar.h"

namespace {

gstar_options defaults() {
  gstar_options o;
  gstar_options_default(&o);
  return o;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  gstar_string_free(s);
  return out;
}

gstar_element* parse(const char* source, const gstar_options& o) {
  gstar_element* e = nullptr;
  REQUIRE(gstar_element_parse(source, &o, &e) == GSTAR_OK);
  return e;
}

std::string text(const gstar_element* e) {
  char* s = nullptr;
  REQUIRE(gstar_element_to_text(e, &s) == GSTAR_OK);
  return take(s);
}

}  // namespace

TEST_CASE("defaults and status names") {
  const auto o = defaults();
  CHECK(o.n == 1);
  CHECK(o.hbar == 1.0);
  CHECK(o.product == GSTAR_PRODUCT_COHERENT);
  CHECK(std::string(gstar_status_name(GSTAR_OK)) != std::string(gstar_status_name(GSTAR_PARSE)));
  gstar_options_default(nullptr);
  gstar_string_free(nullptr);
  gstar_element_destroy(nullptr);
}

TEST_CASE("null pointers") {
  const auto o = defaults();
  gstar_element* e = nullptr;
  CHECK(gstar_element_parse(nullptr, &o, &e) == GSTAR_NULL_POINTER);
  CHECK(gstar_element_parse("t1", &o, nullptr) == GSTAR_NULL_POINTER);
  CHECK(gstar_star(nullptr, nullptr, &o, &e) == GSTAR_NULL_POINTER);
  CHECK(std::string(gstar_last_error()).size() > 0);
}

TEST_CASE("parse errors") {
  const auto o = defaults();
  gstar_element* e = nullptr;
  CHECK(gstar_element_parse("tb2", &o, &e) == GSTAR_PARSE);
  CHECK(e == nullptr);
  CHECK(std::string(gstar_last_error()).find("1:1") != std::string::npos);
  CHECK(gstar_element_parse("z t1", &o, &e) == GSTAR_OK);
  gstar_element_destroy(e);
  auto f = o;
  f.sector = GSTAR_SECTOR_FERMIONIC;
  e = nullptr;
  CHECK(gstar_element_parse("z t1", &f, &e) == GSTAR_DOMAIN);
}

TEST_CASE("elements") {
  const auto o = defaults();
  gstar_element* a = parse("t1", o);
  gstar_element* b = parse("tb1", o);
  unsigned modes = 0;
  CHECK(gstar_element_modes(a, &modes) == GSTAR_OK);
  CHECK(modes == 1);
  int super = -1;
  CHECK(gstar_element_is_super(a, &super) == GSTAR_OK);
  CHECK(super == 0);

  gstar_element* p = nullptr;
  REQUIRE(gstar_star(a, b, &o, &p) == GSTAR_OK);
  CHECK(text(p) == "1 - tb1 t1");

  char* json = nullptr;
  REQUIRE(gstar_element_to_json(p, &json) == GSTAR_OK);
  const std::string js = take(json);
  gstar_element* back = nullptr;
  REQUIRE(gstar_element_from_json(js.c_str(), &back) == GSTAR_OK);
  CHECK(text(back) == text(p));
  CHECK(gstar_element_from_json("{not json", &back) == GSTAR_INVALID_ARGUMENT);

  auto sym = o;
  sym.product = GSTAR_PRODUCT_SYMMETRIC;
  gstar_element* q = nullptr;
  REQUIRE(gstar_star(a, b, &sym, &q) == GSTAR_OK);
  CHECK(text(q) == "0.5 - tb1 t1");

  auto two = o;
  two.n = 2;
  gstar_element* c = parse("t2", two);
  gstar_element* r = nullptr;
  CHECK(gstar_star(a, c, &o, &r) == GSTAR_DIMENSION);

  gstar_element* s = parse("z @s zb", o);
  CHECK(gstar_element_is_super(s, &super) == GSTAR_OK);
  CHECK(super == 1);
  CHECK(gstar_star(a, s, &o, &r) == GSTAR_DIMENSION);

  for (gstar_element* x : {a, b, p, back, q, c, s}) gstar_element_destroy(x);
}

TEST_CASE("eval") {
  const auto o = defaults();
  char* out = nullptr;
  REQUIRE(gstar_eval("(z @s zb) + (t1 @s tb1)", &o, &out) == GSTAR_OK);
  const auto j = nlohmann::json::parse(take(out));
  CHECK(j.at("text") == "2 + z zb - tb1 t1");
}

TEST_CASE("check") {
  auto o = defaults();
  o.n = 1;
  o.trials = 20;
  char* out = nullptr;
  int passed = -1;
  REQUIRE(gstar_check("fermionic", &o, &out, &passed) == GSTAR_OK);
  const auto j = nlohmann::json::parse(take(out));
  CHECK(passed == 1);
  CHECK(j.at("pass") == true);
  CHECK(gstar_check("nope", &o, &out, &passed) == GSTAR_INVALID_ARGUMENT);
  REQUIRE(gstar_check("oscillator", &o, &out, &passed) == GSTAR_OK);
  take(out);
  CHECK(passed == 0);
}

TEST_CASE("bogoliubov") {
  char* out = nullptr;
  REQUIRE(gstar_bogoliubov("[[0, 0.4], [-0.4, 0]]", nullptr, &out) == GSTAR_OK);
  const auto j = nlohmann::json::parse(take(out));
  CHECK(j.at("canonical_residual").get<double>() < 1e-14);
  CHECK(j.at("covariance_residual").is_null());
  CHECK(gstar_bogoliubov("[[0, 1], [1, 0]]", nullptr, &out) == GSTAR_DOMAIN);
  CHECK(gstar_bogoliubov("[[0, [0, 1]], [[0, -1], 0]]", nullptr, &out) == GSTAR_OK);
  take(out);
}

TEST_CASE("oracle comparison") {
  auto o = defaults();
  o.n = 2;
  o.trials = 20;
  char* out = nullptr;
  int pass = 0;
  REQUIRE(gstar_oracle_compare(&o, &out, &pass) == GSTAR_OK);
  const auto j = nlohmann::json::parse(take(out));
  CHECK(pass == 1);
  CHECK(j.at("max_residual").get<double>() < 1e-12);
  o.n = 9;
  CHECK(gstar_oracle_compare(&o, &out, &pass) == GSTAR_INVALID_ARGUMENT);
}
