#include "setopt/capi.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "setopt/builtins.hpp"
#include "setopt/error.hpp"
#include "setopt/expr.hpp"
#include "setopt/scenario.hpp"

struct setopt_workspace {
  setopt::WorkspacePtr ws;
};
struct setopt_set {
  setopt::UpperSet s;
};
struct setopt_report {
  setopt::ScenarioRun run;
};

namespace {

thread_local std::string g_last_error;

template <class F>
setopt_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return SETOPT_OK;
  } catch (const setopt::Error& e) {
    g_last_error = e.what();
    return static_cast<setopt_status>(static_cast<int>(e.code()));
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SETOPT_INTERNAL_ERROR;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void require(bool ok, const char* what) {
  if (!ok) throw setopt::Error(setopt::ErrorCode::InvalidArgument, what);
}

setopt::RunOptions options(const char* tolerance, int jobs) {
  setopt::RunOptions o;
  require(jobs >= 1, "jobs must be at least 1");
  o.jobs = jobs;
  if (tolerance && *tolerance) {
    try {
      o.tolerance = setopt::parse_rational(tolerance);
    } catch (const std::invalid_argument& e) {
      throw setopt::Error(setopt::ErrorCode::ValidationError, std::string("bad tolerance: ") + e.what());
    }
    if (*o.tolerance <= 0) throw setopt::Error(setopt::ErrorCode::ValidationError, "tolerance must be positive");
  }
  return o;
}

}  // namespace

extern "C" {

const char* setopt_status_name(setopt_status status) {
  if (status == SETOPT_OK) return "OK";
  if (status == SETOPT_INTERNAL_ERROR) return "InternalError";
  return setopt::error_code_name(static_cast<setopt::ErrorCode>(status));
}

const char* setopt_last_error(void) { return g_last_error.c_str(); }

void setopt_string_free(char* s) { std::free(s); }

setopt_status setopt_workspace_create(const char* generators, setopt_workspace** out) {
  return guarded([&] {
    require(out, "null output");
    auto ws = (!generators || !*generators) ? setopt::builtins::quadrant()
                                            : setopt::Workspace::make(setopt::parse_cone(generators));
    *out = new setopt_workspace{ws};
  });
}

void setopt_workspace_free(setopt_workspace* ws) { delete ws; }

setopt_status setopt_set_eval(const setopt_workspace* ws, const char* expr, setopt_set** out) {
  return guarded([&] {
    require(ws && expr && out, "null argument");
    *out = new setopt_set{setopt::eval_expr(*ws->ws, expr)};
  });
}

void setopt_set_free(setopt_set* s) { delete s; }

setopt_status setopt_set_json(const setopt_workspace* ws, const setopt_set* s, char** out) {
  return guarded([&] {
    require(ws && s && out, "null argument");
    *out = dup(setopt::io::describe(*ws->ws, s->s).dump(2));
  });
}

setopt_status setopt_set_compare(const setopt_set* a, const setopt_set* b, int* leq, int* equal) {
  return guarded([&] {
    require(a && b, "null argument");
    if (leq) *leq = setopt::leq(a->s, b->s);
    if (equal) *equal = setopt::set_equal(a->s, b->s);
  });
}

setopt_status setopt_set_combine(const setopt_workspace* ws, char op, const setopt_set* a, const setopt_set* b,
                                 setopt_set** out) {
  return guarded([&] {
    require(ws && a && b && out, "null argument");
    const setopt::Workspace& w = *ws->ws;
    setopt::UpperSet r;
    switch (op) {
      case '+': r = setopt::add(w, a->s, b->s); break;
      case '|': r = setopt::inf_family(w, {a->s, b->s}); break;
      case '&': r = setopt::sup_family(w, {a->s, b->s}); break;
      case '/': r = setopt::residual_diff(w, a->s, b->s); break;
      default: require(false, "unknown operator");
    }
    *out = new setopt_set{r};
  });
}

setopt_status setopt_set_svg(const setopt_workspace* ws, const setopt_set* const* sets, const char* const* names,
                             size_t count, char** out) {
  return guarded([&] {
    require(ws && out && (count == 0 || (sets && names)), "null argument");
    setopt::NamedSets named;
    for (size_t i = 0; i < count; ++i) named.emplace_back(names[i], sets[i]->s);
    *out = dup(setopt::plot_svg(*ws->ws, named));
  });
}

setopt_status setopt_scenario_run_file(const char* path, const char* tolerance, int jobs, setopt_report** out) {
  return guarded([&] {
    require(path && out, "null argument");
    setopt::RunOptions o = options(tolerance, jobs);
    *out = new setopt_report{setopt::run_scenario(setopt::load_scenario(path), o)};
  });
}

setopt_status setopt_scenario_run_json(const char* json, const char* tolerance, int jobs, setopt_report** out) {
  return guarded([&] {
    require(json && out, "null argument");
    setopt::RunOptions o = options(tolerance, jobs);
    *out = new setopt_report{setopt::run_scenario(setopt::parse_scenario(json), o)};
  });
}

void setopt_report_free(setopt_report* r) { delete r; }

setopt_status setopt_report_json(const setopt_report* r, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    *out = dup(r->run.report.dump(2) + "\n");
  });
}

setopt_status setopt_report_text(const setopt_report* r, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    *out = dup(r->run.text);
  });
}

setopt_status setopt_report_svg(const setopt_report* r, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    require(r->run.plot_ws && !r->run.plot_sets.empty(), "the scenario declares nothing to plot");
    *out = dup(setopt::plot_svg(*r->run.plot_ws, r->run.plot_sets));
  });
}

long setopt_report_failures(const setopt_report* r) { return r ? r->run.failures : -1; }
long setopt_report_task_errors(const setopt_report* r) { return r ? r->run.task_errors : -1; }

}  // extern "C"
