#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "setopt/capi.h"

namespace {
std::string take(char* s) {
  std::string out = s ? s : "";
  setopt_string_free(s);
  return out;
}
}  // namespace

TEST_CASE("workspace and set handles") {
  setopt_workspace* ws = nullptr;
  REQUIRE(setopt_workspace_create("1,0; 0,1", &ws) == SETOPT_OK);
  setopt_set *a = nullptr, *b = nullptr, *c = nullptr;
  REQUIRE(setopt_set_eval(ws, "pt(1,1)", &a) == SETOPT_OK);
  REQUIRE(setopt_set_eval(ws, "C", &b) == SETOPT_OK);
  int leq = -1, eq = -1;
  CHECK(setopt_set_compare(b, a, &leq, &eq) == SETOPT_OK);
  CHECK(leq == 1);
  CHECK(eq == 0);
  REQUIRE(setopt_set_combine(ws, '/', a, b, &c) == SETOPT_OK);
  CHECK(setopt_set_compare(a, c, nullptr, &eq) == SETOPT_OK);
  CHECK(eq == 1);
  char* json = nullptr;
  REQUIRE(setopt_set_json(ws, c, &json) == SETOPT_OK);
  CHECK(take(json).find("\"tag\": \"poly\"") != std::string::npos);
  const setopt_set* sets[] = {a, b};
  const char* names[] = {"a", "b"};
  char* svg = nullptr;
  CHECK(setopt_set_svg(ws, sets, names, 2, &svg) == SETOPT_OK);
  CHECK(take(svg).rfind("<?xml", 0) == 0);
  setopt_set* d = nullptr;
  CHECK(setopt_set_combine(ws, '?', a, b, &d) == SETOPT_INVALID_ARGUMENT);
  CHECK(d == nullptr);
  setopt_set_free(a);
  setopt_set_free(b);
  setopt_set_free(c);
  setopt_workspace_free(ws);
}

TEST_CASE("error codes and messages") {
  setopt_workspace* ws = nullptr;
  CHECK(setopt_workspace_create("1,0,0; 0,1,0; 0,0,1", &ws) == SETOPT_DIMENSION_UNSUPPORTED);
  CHECK(std::string(setopt_last_error()).size() > 0);
  REQUIRE(setopt_workspace_create(nullptr, &ws) == SETOPT_OK);
  CHECK(std::string(setopt_last_error()).empty());
  setopt_set* s = nullptr;
  CHECK(setopt_set_eval(ws, "pt(1", &s) == SETOPT_VALIDATION_ERROR);
  CHECK(setopt_set_eval(ws, "half(1,0 : 0)", &s) == SETOPT_NORMAL_OUTSIDE_DUAL_CONE);
  CHECK(setopt_set_eval(nullptr, "C", &s) == SETOPT_INVALID_ARGUMENT);
  CHECK(std::string(setopt_status_name(SETOPT_EMPTY_GRID)) == "EmptyGrid");
  CHECK(std::string(setopt_status_name(SETOPT_OK)) == "OK");
  setopt_workspace_free(ws);
}

TEST_CASE("scenario reports") {
  const char* sc = R"J({"name": "t", "workspace": {"builtin": "quadrant"},
                       "sets": {"A": "pt(0,1)"},
                       "tasks": [{"op": "infdir", "z": [0, -1], "store": "H", "expect": {"/set/tag": "poly"}}],
                       "plot": ["A", "H"]})J";
  setopt_report* r = nullptr;
  REQUIRE(setopt_scenario_run_json(sc, "1/1000", 2, &r) == SETOPT_OK);
  CHECK(setopt_report_failures(r) == 0);
  CHECK(setopt_report_task_errors(r) == 0);
  char *j1 = nullptr, *text = nullptr, *svg = nullptr;
  REQUIRE(setopt_report_json(r, &j1) == SETOPT_OK);
  std::string report = take(j1);
  CHECK(report.find("\"tolerance\": \"1/1000\"") != std::string::npos);
  REQUIRE(setopt_report_text(r, &text) == SETOPT_OK);
  CHECK(take(text).find("[ok]") != std::string::npos);
  REQUIRE(setopt_report_svg(r, &svg) == SETOPT_OK);
  CHECK(take(svg).find("<polygon") != std::string::npos);
  setopt_report_free(r);

  CHECK(setopt_scenario_run_json("{", nullptr, 1, &r) == SETOPT_VALIDATION_ERROR);
  CHECK(setopt_scenario_run_json("{}", "-1", 1, &r) == SETOPT_VALIDATION_ERROR);
  CHECK(setopt_scenario_run_json("{}", nullptr, 0, &r) == SETOPT_INVALID_ARGUMENT);
  CHECK(setopt_scenario_run_file("/nonexistent.json", nullptr, 1, &r) == SETOPT_VALIDATION_ERROR);
}
