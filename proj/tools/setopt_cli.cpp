#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "setopt/capi.h"

namespace {

struct CStr {
  char* p = nullptr;
  ~CStr() { setopt_string_free(p); }
};

int fail(setopt_status st) {
  std::cerr << "error (" << setopt_status_name(st) << "): " << setopt_last_error() << "\n";
  return 1;
}

bool write_file(const std::string& path, const char* content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) std::cerr << "error: cannot write " << path << "\n";
  return static_cast<bool>(out);
}

int check_vi(const std::string& scenario, const std::string& report, const std::string& plot,
             const std::string& tolerance, int jobs) {
  setopt_report* raw = nullptr;
  setopt_status st = setopt_scenario_run_file(scenario.c_str(), tolerance.empty() ? nullptr : tolerance.c_str(), jobs, &raw);
  if (st != SETOPT_OK) return fail(st);
  std::unique_ptr<setopt_report, decltype(&setopt_report_free)> r(raw, setopt_report_free);

  CStr text, json;
  if ((st = setopt_report_text(r.get(), &text.p)) != SETOPT_OK) return fail(st);
  if ((st = setopt_report_json(r.get(), &json.p)) != SETOPT_OK) return fail(st);
  if (report.empty()) {
    std::cerr << text.p;
    std::cout << json.p;
  } else {
    std::cout << text.p;
    if (!write_file(report, json.p)) return 1;
  }
  if (!plot.empty()) {
    CStr svg;
    if ((st = setopt_report_svg(r.get(), &svg.p)) != SETOPT_OK) return fail(st);
    if (!write_file(plot, svg.p)) return 1;
  }
  if (setopt_report_task_errors(r.get()) > 0) return 1;
  return setopt_report_failures(r.get()) > 0 ? 2 : 0;
}

int lattice_eval(const std::string& expr, const std::string& cone, const std::string& plot) {
  setopt_workspace* wraw = nullptr;
  setopt_status st = setopt_workspace_create(cone.c_str(), &wraw);
  if (st != SETOPT_OK) return fail(st);
  std::unique_ptr<setopt_workspace, decltype(&setopt_workspace_free)> ws(wraw, setopt_workspace_free);
  setopt_set* sraw = nullptr;
  if ((st = setopt_set_eval(ws.get(), expr.c_str(), &sraw)) != SETOPT_OK) return fail(st);
  std::unique_ptr<setopt_set, decltype(&setopt_set_free)> s(sraw, setopt_set_free);
  CStr json;
  if ((st = setopt_set_json(ws.get(), s.get(), &json.p)) != SETOPT_OK) return fail(st);
  std::cout << json.p << "\n";
  if (!plot.empty()) {
    const setopt_set* sets[] = {s.get()};
    const char* names[] = {expr.c_str()};
    CStr svg;
    if ((st = setopt_set_svg(ws.get(), sets, names, 1, &svg.p)) != SETOPT_OK) return fail(st);
    if (!write_file(plot, svg.p)) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact set-valued optimization checks over polyhedral upper sets"};
  app.require_subcommand(1);

  std::string scenario, report, plot, tolerance, expr, cone;
  int jobs = 1;
  auto* vi = app.add_subcommand("check-vi", "run a scenario and report the checks");
  vi->add_option("--scenario", scenario, "scenario JSON file")->required();
  vi->add_option("--report", report, "write the JSON report here (default: standard output)");
  vi->add_option("--plot", plot, "write an SVG of the scenario's plot list");
  vi->add_option("--tolerance", tolerance, "oracle tolerance as a rational, e.g. 1/1000000");
  vi->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* le = app.add_subcommand("lattice-eval", "evaluate a set expression");
  le->add_option("--expr", expr, "set expression")->required();
  le->add_option("--cone", cone, "cone generators, e.g. \"1,0; 0,1\" (default: quadrant)");
  le->add_option("--plot", plot, "write an SVG of the result");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  if (*vi) return check_vi(scenario, report, plot, tolerance, jobs);
  return lattice_eval(expr, cone, plot);
}
