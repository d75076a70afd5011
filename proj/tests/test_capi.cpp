#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "vfalg/vfalg.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  vfalg_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("field handles") {
  vfalg_field* a = nullptr;
  vfalg_field* b = nullptr;
  REQUIRE(vfalg_field_parse("x1 d2", &a) == VFALG_OK);
  REQUIRE(vfalg_field_parse("x2 d1", &b) == VFALG_OK);
  vfalg_field* c = nullptr;
  REQUIRE(vfalg_bracket(a, b, &c) == VFALG_OK);
  CHECK(take(vfalg_field_print(c)) == "x1 d1 - x2 d2");

  vfalg_field* back = nullptr;
  REQUIRE(vfalg_field_from_json(take(vfalg_field_to_json(c)).c_str(), &back) == VFALG_OK);
  CHECK(vfalg_field_equal(back, c));

  vfalg_poly* p = nullptr;
  vfalg_poly* q = nullptr;
  REQUIRE(vfalg_poly_parse("x2^2", &p) == VFALG_OK);
  REQUIRE(vfalg_apply(a, p, &q) == VFALG_OK);
  CHECK(take(vfalg_poly_print(q)) == "2*x1*x2");

  vfalg_poly_free(p);
  vfalg_poly_free(q);
  vfalg_field_free(a);
  vfalg_field_free(b);
  vfalg_field_free(c);
  vfalg_field_free(back);
}

TEST_CASE("errors are reported through status and last error") {
  vfalg_field* w = nullptr;
  CHECK(vfalg_field_parse("x1 ^ d1", &w) == VFALG_PARSE);
  CHECK(w == nullptr);
  CHECK(std::strlen(vfalg_last_error()) > 0);
  const auto j = nlohmann::json::parse(vfalg_last_error_json());
  CHECK(j["error"] == "parse_error");
  CHECK(j["column"] == 6);

  CHECK(vfalg_field_parse(nullptr, &w) == VFALG_INVALID_ARGUMENT);
  CHECK(vfalg_field_euler(0, &w) == VFALG_INVALID_ARGUMENT);

  vfalg_result* r = nullptr;
  const vfalg_window bad{2, 0, 3, VFALG_STRICT};
  CHECK(vfalg_centralizer("L", 2, &bad, &r) == VFALG_WINDOW);
  CHECK(nlohmann::json::parse(vfalg_last_error_json())["error"] == "window_violation");
  CHECK(vfalg_centralizer("gl", 2, &bad, &r) == VFALG_INVALID_ARGUMENT);

  // A successful call clears the previous error.
  REQUIRE(vfalg_field_parse("d1", &w) == VFALG_OK);
  CHECK(std::string(vfalg_last_error()).empty());
  vfalg_field_free(w);
}

TEST_CASE("computations") {
  vfalg_result* r = nullptr;
  const vfalg_window w4{4, -1, 1, VFALG_STRICT};
  REQUIRE(vfalg_centralizer("sl", 3, &w4, &r) == VFALG_OK);
  CHECK(vfalg_result_value(r) == 5);
  CHECK(vfalg_result_field_count(r) == 5);
  vfalg_field* first = vfalg_result_field_at(r, 0);
  CHECK(take(vfalg_field_print(first)) == "x1 d1 + x2 d2 + x3 d3");
  CHECK(vfalg_result_field_at(r, 5) == nullptr);
  vfalg_field_free(first);
  vfalg_result_free(r);

  REQUIRE(vfalg_h1(2, -1, 2, &r) == VFALG_OK);
  CHECK(vfalg_result_value(r) == 0);
  CHECK(take(vfalg_result_text(r)) == "0\n");
  vfalg_result_free(r);

  vfalg_field* target = nullptr;
  REQUIRE(vfalg_field_parse("x1^2 d2", &target) == VFALG_OK);
  const vfalg_window w2{2, -1, 2, VFALG_STRICT};
  REQUIRE(vfalg_solve_inner_from_ad("L", 2, target, &w2, &r) == VFALG_OK);
  vfalg_field* sol = vfalg_result_field_at(r, 0);
  CHECK(vfalg_field_equal(sol, target));
  CHECK(vfalg_result_value(r) == 0);
  vfalg_field_free(sol);
  vfalg_result_free(r);

  REQUIRE(vfalg_solve_inner_from_json(R"({"generators":["d1"],"values":["x1^2 d1"]})", &w2, &r) == VFALG_OK);
  CHECK(vfalg_result_value(r) == 8);
  vfalg_result_free(r);

  const vfalg_window w21{2, -1, 1, VFALG_STRICT};
  CHECK(vfalg_solve_inner_from_json(R"({"generators":["d1"],"values":["x1^2 d1"]})", &w21, &r) ==
        VFALG_INCONSISTENT);
  CHECK(nlohmann::json::parse(vfalg_last_error_json())["term"] == "x1^2 d1");
  CHECK(vfalg_solve_inner_from_json(R"({"generators":["d1"]})", &w21, &r) == VFALG_SCHEMA);

  REQUIRE(vfalg_stabilize("solve-inner", "L", target, 2, 4, 0, -1, 2, VFALG_STRICT, &r) == VFALG_OK);
  CHECK(vfalg_result_ok(r));
  vfalg_field* limit = vfalg_result_field_at(r, 0);
  CHECK(vfalg_field_equal(limit, target));
  vfalg_field_free(limit);
  vfalg_result_free(r);
  CHECK(vfalg_stabilize("solve-inner", "L", nullptr, 2, 4, 0, -1, 2, VFALG_STRICT, &r) == VFALG_INVALID_ARGUMENT);

  REQUIRE(vfalg_identities(target, 1, 2, &r) == VFALG_OK);
  CHECK(vfalg_result_ok(r));
  vfalg_result_free(r);
  vfalg_field_free(target);

  REQUIRE(vfalg_verify("poly", 5, &r) == VFALG_OK);
  CHECK(vfalg_result_ok(r));
  CHECK(nlohmann::json::parse(take(vfalg_result_json(r)))["seed"] == 5);
  vfalg_result_free(r);
  CHECK(vfalg_verify("nope", 5, &r) == VFALG_INVALID_ARGUMENT);

  REQUIRE(vfalg_rigidity(2, 1, &r) == VFALG_OK);
  CHECK(nlohmann::json::parse(take(vfalg_result_json(r)))["domain_dim"] == 12);
  vfalg_result_free(r);
}
