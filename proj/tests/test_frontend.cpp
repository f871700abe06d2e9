#include "doctest.h"
#include "kit/corpus.hpp"
#include "kit/rng.hpp"
#include "setopt/builtins.hpp"
#include "setopt/error.hpp"
#include "setopt/expr.hpp"
#include "setopt/json_io.hpp"
#include "setopt/plot.hpp"
#include "setopt/scenario.hpp"

using namespace setopt;
using io::Json;

namespace {
Vec v2(Q a, Q b) { return Vec{a, b}; }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::TaskError;
}
}  // namespace

TEST_CASE("set expressions") {
  auto ws = builtins::quadrant();
  CHECK(set_equal(eval_expr(*ws, "C"), cone_set(*ws)));
  CHECK(eval_expr(*ws, "Z").is_all());
  CHECK(eval_expr(*ws, "Empty").empty);
  CHECK(set_equal(eval_expr(*ws, "pt(1, -2)"), point_plus_cone(*ws, v2(1, -2))));
  CHECK(set_equal(eval_expr(*ws, "pt(1,0) + pt(0,1)"), point_plus_cone(*ws, v2(1, 1))));
  CHECK(set_equal(eval_expr(*ws, "1/2 * pt(2,4)"), point_plus_cone(*ws, v2(1, 2))));
  CHECK(set_equal(eval_expr(*ws, "0 * Empty"), cone_set(*ws)));
  // & binds tighter than |
  UpperSet a = eval_expr(*ws, "pt(0,0) | pt(1,-1) & pt(-1,1)");
  CHECK(set_equal(a, inf_family(*ws, {point_plus_cone(*ws, v2(0, 0)), point_plus_cone(*ws, v2(1, 1))})));
  CHECK(set_equal(eval_expr(*ws, "pt(1,1) -: pt(0,0)"), point_plus_cone(*ws, v2(1, 1))));
  CHECK(set_equal(eval_expr(*ws, "pt(1,1) ÷ C"), point_plus_cone(*ws, v2(1, 1))));
  CHECK(set_equal(eval_expr(*ws, "half(-1,0 : 2)"), canonicalize(*ws, {{v2(-1, 0), Q(2)}})));
  CHECK(set_equal(eval_expr(*ws, "rec(pt(3,3))"), cone_set(*ws)));
  CHECK(eval_expr(*ws, "hull((0,0); (-1,-1))").is_all());
  CHECK(set_equal(eval_expr(*ws, "hull((0,1),(1,0))"), eval_expr(*ws, "pt(0,1) | pt(1,0)")));
  CHECK(eval_expr(*ws, "infdir(1,1)").empty);

  for (const char* bad : {"pt(1)", "pt(1,2", "foo", "C +", "-1 * C", "half(1,0 : 0)", "C C"})
    CHECK_MESSAGE(code_of([&] { eval_expr(*ws, bad); }) != ErrorCode::TaskError, bad);
  CHECK(code_of([&] { eval_expr(*ws, "C )"); }) == ErrorCode::ValidationError);
}

TEST_CASE("residual pair through expressions") {
  auto e = builtins::example23();
  UpperSet B = eval_expr(*e.ws, "hull((-1,0),(1,0))");
  CHECK(set_equal(B, e.B));
  CHECK(eval_expr(*e.ws, "C -: hull((-1,0),(1,0))").empty);
}

TEST_CASE("cone strings") {
  OrderCone c = parse_cone("1,0; 0,1");
  CHECK(c.dim() == 2);
  CHECK(c.contains(v2(1, 2)));
  CHECK_FALSE(c.contains(v2(-1, 2)));
  CHECK(parse_cone("1").dim() == 1);
  CHECK_THROWS_AS(parse_cone("1,0; 1"), Error);
  CHECK_THROWS_AS(parse_cone("a,b"), Error);
}

TEST_CASE("set JSON round trip") {
  kit::Rng r(5);
  for (int i = 0; i < 200; ++i) {
    auto ws = kit::random_workspace(r, i % 3);
    UpperSet s = kit::random_set(r, *ws);
    Json j = io::to_json(s);
    UpperSet back = io::set_from_json(*ws, Json::parse(j.dump()));
    CHECK(set_equal(s, back));
    if (!s.empty) {
      UpperSet from_v = io::set_from_json(*ws, Json{{"points", io::to_json(s.V)}, {"rays", io::to_json(s.R)}});
      CHECK(set_equal(s, from_v));
    }
  }
  CHECK(io::rat_from_json(Json(0.25)) == Q(1, 4));
  CHECK(io::rat_from_json(Json("-3/6")) == Q(-1, 2));
  CHECK(io::to_json(ExtReal::plus_inf()) == "+inf");
  CHECK_THROWS_AS(io::rat_from_json(Json("x")), Error);
  CHECK_THROWS_AS(io::vec_from_json(Json::array({1, 2}), 3), Error);
}

TEST_CASE("svg plots") {
  auto ws = builtins::quadrant();
  std::string svg = plot_svg(*ws, {{"C", cone_set(*ws)}, {"none", empty_set(*ws)}});
  CHECK(svg.find("<polygon") != std::string::npos);
  CHECK(svg.find("none (empty)") != std::string::npos);
  CHECK(svg == plot_svg(*ws, {{"C", cone_set(*ws)}, {"none", empty_set(*ws)}}));
  auto line = Workspace::make(OrderCone::make(1, {Vec{Q(1)}}));
  CHECK(code_of([&] { plot_svg(*line, {}); }) == ErrorCode::DimensionUnsupported);
}

TEST_CASE("scenario runner") {
  Json sc = parse_scenario(R"({
    "schema_version": 1,
    "workspace": {"generators": [[1, 0], [0, 1]]},
    "functions": {"g": {"kind": "parampoly", "xdim": 1, "normals": [[-1, 0]],
                        "offsets": [[{"a": [1], "c": 0}, {"a": [-1], "c": 0}]],
                        "domain": [{"n": [1], "b": 2}]}},
    "vector_functions": {"psi": {"kind": "pwl", "xdim": 1,
                                 "components": [[{"a": [1], "c": 0}], [{"a": [-1], "c": 0}]]}},
    "tasks": [
      {"name": "value", "op": "eval", "function": "g", "x": [1], "expect": {"/set/constraints/0/b": "-1"}},
      {"name": "wrong", "op": "eval", "function": "g", "x": [1], "expect": {"/set/tag": "empty"}},
      {"name": "outside", "op": "minimal", "function": "g", "grid": [[0]], "points": [[5]]},
      {"name": "off domain", "op": "derivative", "function": "g", "x": [3], "u": [1], "expect": {"/value/tag": "poly"}},
      {"name": "vi", "op": "check_vi", "function": "g", "x0": [0], "grid": [[-1], [0], [1]], "ineqs": ["svi_I", "MVI_M"]},
      {"name": "pareto", "op": "efficient", "vector": "psi", "grid": [[0], [1]], "expect": {"bridge": true}}
    ]
  })");
  ScenarioRun run = run_scenario(sc);
  const Json& tasks = run.report["tasks"];
  CHECK(run.report["schema_version"] == 1);
  CHECK(tasks[0]["failures"].empty());
  CHECK(tasks[1]["failures"].size() == 1);
  CHECK(tasks[2]["result"]["count"] == 0);
  CHECK(tasks[3]["result"]["value"]["tag"] == "poly");  // off the domain f' is Z
  CHECK(tasks[4]["result"]["reports"].size() == 2);
  CHECK(tasks[5]["result"]["efficient_points"].size() == 2);
  CHECK(run.failures == 1);
  CHECK(run.task_errors == 0);

  auto validation = [](const char* text) {
    return code_of([&] { run_scenario(parse_scenario(text)); }) == ErrorCode::ValidationError;
  };
  CHECK(validation("{"));
  CHECK(validation(R"({"schema_version": 2})"));
  CHECK(validation(R"({"tasks": [{"op": "nope"}]})"));
  CHECK(validation(R"({"tasks": [{"op": "eval", "function": "f", "x": [0]}]})"));
  CHECK(validation(R"({"functions": {"f": {"builtin": "heyde_a"}}, "tasks": [{"op": "eval", "function": "f", "x": [0]}]})"));
  CHECK(validation(R"({"workspace": {"generators": [[1, 0], [0, 1]]}, "sets": {"A": "pt(1,"}})"));
  CHECK(validation(R"({"functions": {"f": {"builtin": "circle"}}, "tolerance": "0"})"));

  Json err = parse_scenario(R"({"vector_functions": {"p": {"builtin": "abs_pair"}},
                                "tasks": [{"op": "efficient", "vector": "p", "grid": []}]})");
  ScenarioRun e = run_scenario(err);
  CHECK(e.task_errors == 1);
  CHECK(e.report["tasks"][0]["error"]["code"] == "EmptyGrid");
}
