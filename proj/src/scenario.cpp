#include "setopt/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "setopt/builtins.hpp"
#include "setopt/calculus.hpp"
#include "setopt/error.hpp"
#include "setopt/vectoropt.hpp"
#include "setopt/vi.hpp"

namespace setopt {

using io::Json;
using io::to_json;

namespace {

constexpr int kSchemaVersion = 1;

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::ValidationError, what); }

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) invalid(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

std::string str_field(const Json& obj, const char* key, const std::string& where) {
  const Json& j = field(obj, key, where);
  if (!j.is_string()) invalid(where + ": \"" + key + "\" must be a string");
  return j.get<std::string>();
}

int int_field(const Json& obj, const char* key, const std::string& where) {
  const Json& j = field(obj, key, where);
  if (!j.is_number_integer()) invalid(where + ": \"" + key + "\" must be an integer");
  return j.get<int>();
}

std::vector<Affine> pieces_from_json(const Json& j, int xdim, const std::string& where) {
  if (!j.is_array() || j.empty()) invalid(where + ": expected a nonempty list of affine pieces");
  std::vector<Affine> out;
  for (const auto& p : j) out.push_back(Affine{io::vec_from_json(field(p, "a", where), xdim), io::rat_from_json(field(p, "c", where))});
  return out;
}

XPolyhedron domain_from_json(const Json& obj, int xdim) {
  XPolyhedron S;
  if (obj.contains("domain")) S.rows = io::halfspaces_from_json(obj["domain"], xdim);
  return S;
}

Translation translation_from_json(const Json& j, int xdim, const std::string& where) {
  Translation M;
  std::string kind = j.value("kind", "finite");
  if (kind == "finite") M.kind = Translation::Kind::Finite;
  else if (kind == "polyhedron") M.kind = Translation::Kind::Polyhedron;
  else invalid(where + ": translation kind must be \"finite\" or \"polyhedron\"");
  M.points = io::vecs_from_json(field(j, "points", where), xdim);
  if (j.contains("rays")) M.rays = io::vecs_from_json(j["rays"], xdim);
  return M;
}

Json witness_json(const Witness& w) {
  Json j{{"index", w.index}, {"x", to_json(w.x)}, {"note", w.note}};
  if (w.zstar) j["zstar"] = to_json(*w.zstar);
  if (w.t) j["t"] = to_json(*w.t);
  return j;
}

Json witnesses_json(const std::vector<Witness>& ws) {
  Json a = Json::array();
  for (const auto& w : ws) a.push_back(witness_json(w));
  return a;
}

Json vi_json(const ViReport& r) {
  Json j{{"id", ineq_name(r.id)}, {"holds", r.holds}, {"exact", r.exact}, {"witnesses", witnesses_json(r.witnesses)}};
  if (r.alt_form_agrees) j["alt_form_agrees"] = *r.alt_form_agrees;
  return j;
}

Json infimizer_json(const InfimizerReport& r) {
  Json j{{"infimizer", r.infimizer},
         {"exact", r.exact},
         {"inf_space", to_json(r.inf_space)},
         {"fhat_M", to_json(r.fhat_M)},
         {"fhat_coM", to_json(r.fhat_coM)},
         {"co_equal", r.co_equal}};
  if (r.translated_svi_I) j["translated_svi_I"] = *r.translated_svi_I;
  return j;
}

void check_expectations(const Json& result, const Json& expect, std::vector<std::string>& failures) {
  for (const auto& [key, want] : expect.items()) {
    Json::json_pointer ptr(key.starts_with("/") ? key : "/" + key);
    if (!result.contains(ptr)) {
      failures.push_back("expected " + key + " = " + want.dump() + ", but the result has no such entry");
      continue;
    }
    const Json& got = result.at(ptr);
    if (got != want) failures.push_back("expected " + key + " = " + want.dump() + ", got " + got.dump());
  }
}

bool is_quadrant(const OrderCone& C) {
  if (C.generators().size() != static_cast<std::size_t>(C.dim())) return false;
  for (int i = 0; i < C.dim(); ++i)
    if (!C.contains(unit(C.dim(), i))) return false;
  for (const auto& g : C.generators()) {
    int nonzero = 0;
    for (const auto& c : g) nonzero += c != 0;
    if (nonzero != 1) return false;
  }
  return true;
}

class Runner {
 public:
  Runner(const Json& sc, const RunOptions& opt) : sc_(sc), opt_(opt) {}

  ScenarioRun run() {
    load();
    ScenarioRun out;
    Json tasks = Json::array();
    std::ostringstream text;
    text << "scenario " << name_ << "\n";
    const Json& list = sc_.contains("tasks") ? sc_["tasks"] : Json::array();
    if (!list.is_array()) invalid("\"tasks\" must be a list");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const Json& task = list[i];
      const std::string where = "task " + std::to_string(i);
      std::string op = str_field(task, "op", where);
      std::string tname = task.value("name", "task" + std::to_string(i));
      std::vector<std::string> failures;
      Json entry{{"name", tname}, {"op", op}};
      std::string matrix;
      try {
        Json result = dispatch(op, task, where + " (" + op + ")", failures, matrix);
        if (task.contains("expect")) {
          if (!task["expect"].is_object()) invalid(where + ": \"expect\" must be an object");
          check_expectations(result, task["expect"], failures);
        }
        entry["result"] = result;
      } catch (const Error& e) {
        if (e.code() == ErrorCode::ValidationError) throw;
        entry["error"] = Json{{"code", error_code_name(e.code())}, {"message", e.what()}};
        ++out.task_errors;
      }
      entry["failures"] = failures;
      out.failures += static_cast<long>(failures.size());
      text << (entry.contains("error") ? "[ERROR] " : failures.empty() ? "[ok]    " : "[FAIL]  ") << tname << " (" << op
           << ")";
      if (entry.contains("error")) text << ": " << entry["error"]["message"].get<std::string>();
      text << "\n";
      for (const auto& f : failures) text << "        " << f << "\n";
      text << matrix;
      tasks.push_back(entry);
    }

    Json env{{"tolerance", to_json(tolerance_)}, {"jobs_independent", true}};
    Json fenv = Json::object();
    for (const auto& [n, f] : funcs_) fenv[n] = Json{{"exact", f.exact()}, {"xdim", f.xdim()}, {"zdim", f.ws().dim()}};
    Json venv = Json::object();
    for (const auto& [n, v] : vecs_) venv[n] = Json{{"exact", v.exact()}, {"xdim", v.xdim()}, {"zdim", v.ws().dim()}};
    env["functions"] = fenv;
    env["vector_functions"] = venv;

    out.report = Json{{"schema_version", kSchemaVersion},
                      {"scenario", name_},
                      {"environment", env},
                      {"tasks", tasks},
                      {"summary", Json{{"tasks", tasks.size()}, {"failures", out.failures}, {"task_errors", out.task_errors}}}};
    text << "summary: " << tasks.size() << " tasks, " << out.failures << " failures, " << out.task_errors
         << " task errors\n";
    out.text = text.str();
    collect_plot(out);
    return out;
  }

 private:
  // ---- loading --------------------------------------------------------------------------------------------

  void load() {
    if (!sc_.is_object()) invalid("scenario must be a JSON object");
    if (sc_.contains("schema_version") && sc_["schema_version"] != kSchemaVersion)
      invalid("unsupported schema_version " + sc_["schema_version"].dump());
    name_ = sc_.value("name", "scenario");
    tolerance_ = sc_.contains("tolerance") ? io::rat_from_json(sc_["tolerance"]) : Q(1, 1000000);
    if (opt_.tolerance) tolerance_ = *opt_.tolerance;
    if (tolerance_ <= 0) invalid("tolerance must be positive");
    try {
      load_workspace();
      load_vectors();
      load_functions();
      load_sets();
      load_grids();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ValidationError) throw;
      invalid(std::string("invalid scenario data: ") + e.what());
    }
  }

  void load_workspace() {
    if (!sc_.contains("workspace")) return;
    const Json& w = sc_["workspace"];
    if (w.contains("builtin")) {
      std::string b = w["builtin"].get<std::string>();
      if (b == "quadrant") ws_ = builtins::quadrant();
      else if (b == "example23") ws_ = builtins::example23().ws;
      else invalid("unknown builtin workspace " + b);
      return;
    }
    std::vector<Vec> gens = io::vecs_from_json(field(w, "generators", "workspace"));
    int dim = w.contains("dim") ? int_field(w, "dim", "workspace") : gens.empty() ? -1 : static_cast<int>(gens[0].size());
    if (dim < 0) invalid("workspace: give \"dim\" or at least one generator");
    std::vector<Vec> dirs = w.contains("directions") ? io::vecs_from_json(w["directions"], dim) : std::vector<Vec>{};
    ws_ = Workspace::make(OrderCone::make(dim, gens), dirs);
  }

  WorkspacePtr need_ws(const std::string& where) const {
    if (!ws_) invalid(where + ": needs a scenario \"workspace\"");
    return ws_;
  }

  void load_vectors() {
    if (!sc_.contains("vector_functions")) return;
    for (const auto& [n, spec] : sc_["vector_functions"].items()) {
      const std::string where = "vector function " + n;
      if (spec.contains("builtin")) {
        std::string b = spec["builtin"].get<std::string>();
        if (b == "abs_pair") vecs_.emplace(n, builtins::abs_pair());
        else if (b == "infdir_trail") vecs_.emplace(n, builtins::infdir_trail(tolerance_));
        else invalid(where + ": unknown builtin " + b);
        continue;
      }
      if (str_field(spec, "kind", where) != "pwl") invalid(where + ": kind must be \"pwl\"");
      int xdim = int_field(spec, "xdim", where);
      std::vector<ConvexPWL> comps;
      for (const auto& c : field(spec, "components", where)) comps.push_back(ConvexPWL{pieces_from_json(c, xdim, where)});
      vecs_.emplace(n, VectorFunction::pwl(need_ws(where), xdim, comps, domain_from_json(spec, xdim), n));
    }
  }

  void load_functions() {
    if (!sc_.contains("functions")) return;
    // "translated" entries may refer to functions declared earlier in key order
    for (const auto& [n, spec] : sc_["functions"].items()) {
      const std::string where = "function " + n;
      if (spec.contains("builtin")) {
        std::string b = spec["builtin"].get<std::string>();
        if (b == "heyde_a") funcs_.emplace(n, builtins::heyde_a());
        else if (b == "heyde_b") funcs_.emplace(n, builtins::heyde_b(spec.value("max_coeff", 6), tolerance_));
        else if (b == "circle") funcs_.emplace(n, builtins::circle(tolerance_));
        else if (b == "no_solution_line") funcs_.emplace(n, builtins::no_solution_line());
        else if (b == "abs_diagonal") funcs_.emplace(n, builtins::abs_diagonal());
        else invalid(where + ": unknown builtin " + b);
        continue;
      }
      std::string kind = str_field(spec, "kind", where);
      if (kind == "epigraphical") {
        funcs_.emplace(n, vector(str_field(spec, "of", where), where).epigraphical());
        continue;
      }
      if (kind == "translated") {
        const SetFunction& f = function(str_field(spec, "of", where), where);
        funcs_.emplace(n, translated_function(f, translation_from_json(field(spec, "M", where), f.xdim(), where)));
        continue;
      }
      int xdim = int_field(spec, "xdim", where);
      if (kind == "parampoly") {
        ParamPolyData d;
        d.normals = io::vecs_from_json(field(spec, "normals", where), need_ws(where)->dim());
        for (const auto& o : field(spec, "offsets", where)) d.offsets.push_back(ConcavePWL{pieces_from_json(o, xdim, where)});
        d.domain = domain_from_json(spec, xdim);
        funcs_.emplace(n, SetFunction::param_poly(need_ws(where), xdim, std::move(d), n));
      } else if (kind == "epivector") {
        EpiVectorData d;
        for (const auto& c : field(spec, "components", where)) d.components.push_back(ConvexPWL{pieces_from_json(c, xdim, where)});
        d.domain = domain_from_json(spec, xdim);
        funcs_.emplace(n, SetFunction::epi_vector(need_ws(where), xdim, std::move(d), n));
      } else {
        invalid(where + ": unknown kind " + kind);
      }
    }
  }

  void load_sets() {
    if (!sc_.contains("sets")) return;
    for (const auto& [n, spec] : sc_["sets"].items()) {
      const std::string where = "set " + n;
      if (spec.is_object() && spec.contains("builtin")) {
        std::string b = spec["builtin"].get<std::string>();
        auto e = builtins::example23();
        if (!ws_ || ws_->cone().generators() != e.ws->cone().generators())
          invalid(where + ": builtin example23 sets need the example23 workspace");
        if (b == "example23.A") sets_.emplace(n, e.A);
        else if (b == "example23.B") sets_.emplace(n, e.B);
        else invalid(where + ": unknown builtin " + b);
        continue;
      }
      sets_.emplace(n, io::set_from_json(*need_ws(where), spec));
    }
  }

  void load_grids() {
    if (!sc_.contains("grids")) return;
    for (const auto& [n, spec] : sc_["grids"].items()) grids_.emplace(n, grid_from_json(spec, "grid " + n));
  }

  std::vector<Vec> grid_from_json(const Json& spec, const std::string& where) const {
    if (spec.is_array()) return io::vecs_from_json(spec);
    if (spec.contains("points")) return io::vecs_from_json(spec["points"]);
    if (!spec.contains("box")) invalid(where + ": grid needs \"points\" or \"box\"");
    const Json& b = spec["box"];
    Vec lo = io::vec_from_json(field(b, "lo", where)), hi = io::vec_from_json(field(b, "hi", where), static_cast<int>(lo.size()));
    Q step = io::rat_from_json(field(b, "step", where));
    if (step <= 0) invalid(where + ": step must be positive");
    std::vector<Vec> out{Vec{}};
    for (std::size_t i = 0; i < lo.size(); ++i) {
      std::vector<Vec> next;
      for (const auto& p : out)
        for (Q t = lo[i]; t <= hi[i]; t += step) {
          Vec q = p;
          q.push_back(t);
          next.push_back(q);
        }
      out = next;
    }
    if (out.size() > 100000) invalid(where + ": grid too large");
    return out;
  }

  // ---- argument lookup ------------------------------------------------------------------------------------

  const SetFunction& function(const std::string& n, const std::string& where) const {
    auto it = funcs_.find(n);
    if (it == funcs_.end()) invalid(where + ": unknown function " + n);
    return it->second;
  }

  const VectorFunction& vector(const std::string& n, const std::string& where) const {
    auto it = vecs_.find(n);
    if (it == vecs_.end()) invalid(where + ": unknown vector function " + n);
    return it->second;
  }

  std::vector<Vec> grid(const Json& task, const char* key, int dim, const std::string& where) const {
    const Json& g = field(task, key, where);
    std::vector<Vec> pts;
    if (g.is_string()) {
      auto it = grids_.find(g.get<std::string>());
      if (it == grids_.end()) invalid(where + ": unknown grid " + g.get<std::string>());
      pts = it->second;
    } else {
      pts = grid_from_json(g, where);
    }
    for (const auto& p : pts)
      if (static_cast<int>(p.size()) != dim) invalid(where + ": grid point dimension differs from the function");
    return pts;
  }

  UpperSet set_arg(const Json& task, const char* key, const std::string& where) const {
    const Json& j = field(task, key, where);
    if (j.is_string()) {
      auto it = sets_.find(j.get<std::string>());
      if (it != sets_.end()) return it->second;
    }
    return io::set_from_json(*need_ws(where), j);
  }

  std::vector<Vec> directions(const Json& task, const char* key, const Workspace& ws) const {
    if (!task.contains(key)) return ws.directions();
    return io::vecs_from_json(task[key], ws.dim());
  }

  std::vector<Vec> bases(const Json& task, const std::vector<Vec>& grid, int dim) const {
    if (!task.contains("points") || task["points"] == "all") return grid;
    return io::vecs_from_json(task["points"], dim);
  }

  void store(const Json& task, WorkspacePtr ws, const UpperSet& s) {
    if (!task.contains("store")) return;
    if (!task["store"].is_string()) invalid("\"store\" must be a name");
    stored_[task["store"].get<std::string>()] = {std::move(ws), s};
  }

  // ---- tasks ----------------------------------------------------------------------------------------------

  Json dispatch(const std::string& op, const Json& t, const std::string& where, std::vector<std::string>& fail,
                std::string& matrix) {
    if (op == "lattice") {
      UpperSet s = io::set_from_json(*need_ws(where), field(t, "expr", where));
      store(t, ws_, s);
      return io::describe(*ws_, s);
    }
    if (op == "residual") return residual_task(t, where, fail);
    if (op == "eval") {
      const SetFunction& f = function(str_field(t, "function", where), where);
      UpperSet s = f.eval(io::vec_from_json(field(t, "x", where), f.xdim()));
      store(t, f.ws_ptr(), s);
      return io::describe(f.ws(), s);
    }
    if (op == "derivative") return derivative(t, where, fail);
    if (op == "check_vi") return check_vi(t, where);
    if (op == "audit") return audit(t, where, fail, matrix);
    if (op == "minimal") return minimal(t, where, fail);
    if (op == "infimum") return infimum(t, where, fail);
    if (op == "infimizer" || op == "solution") return solution(op, t, where);
    if (op == "efficient") return efficient(t, where, fail);
    if (op == "vector_dini") return vdini(t, where, fail);
    if (op == "minty") return minty(t, where, fail);
    if (op == "infdir") {
      WorkspacePtr ws = ws_ ? ws_ : builtins::quadrant();
      UpperSet s = infdir_plus_cone(*ws, io::vec_from_json(field(t, "z", where), ws->dim()));
      store(t, ws, s);
      return io::describe(*ws, s);
    }
    if (op == "trail") return trail(t, where);
    invalid(where + ": unknown op");
  }

  Json residual_task(const Json& t, const std::string& where, std::vector<std::string>& fail) {
    const Workspace& ws = *need_ws(where);
    UpperSet a = set_arg(t, "a", where), b = set_arg(t, "b", where);
    UpperSet r = residual_diff(ws, a, b);
    store(t, ws_, r);
    Json per = Json::array();
    for (const auto& z : ws.directions()) {
      ExtReal pa = neg_support(z, a), pb = neg_support(z, b), sr = residual(pa, pb), pr = neg_support(z, r);
      if (!(sr <= pr)) fail.push_back("scalar residuation exceeds the scalarized residual at z* = " + to_string(z));
      per.push_back(Json{{"zstar", to_json(z)},
                         {"phi_a", to_json(pa)},
                         {"phi_b", to_json(pb)},
                         {"scalar_residual", to_json(sr)},
                         {"phi_of_residual", to_json(pr)}});
    }
    Json j = io::describe(ws, r);
    j["per_direction"] = per;
    return j;
  }

  Json derivative(const Json& t, const std::string& where, std::vector<std::string>& fail) {
    const SetFunction& f = function(str_field(t, "function", where), where);
    const Workspace& ws = f.ws();
    Vec x = io::vec_from_json(field(t, "x", where), f.xdim()), u = io::vec_from_json(field(t, "u", where), f.xdim());
    std::vector<Vec> dirs = directions(t, "directions", ws);
    DerivativeResult d = set_derivative(f, x, u);
    RegularityReport reg = regularity_check(f, x, u, dirs);
    store(t, f.ws_ptr(), d.value);
    Json scal = Json::array();
    for (const auto& z : dirs) {
      ScalarDini s = scalar_dini(f, z, x, u);
      ExtReal bound = neg_support(z, d.value);
      bool ok = s.value <= bound;
      if (!ok && !s.exact && s.value.finite() && bound.finite()) ok = s.value.value() - bound.value() <= tolerance_;
      if (!ok && d.exact && s.exact) fail.push_back("scalar Dini derivative above phi of f' at z* = " + to_string(z));
      scal.push_back(Json{{"zstar", to_json(z)}, {"dini", to_json(s.value)}, {"exact", s.exact}, {"phi_of_derivative", to_json(bound)}});
    }
    Json j{{"value", to_json(d.value)},
           {"exact", d.exact},
           {"scalar", scal},
           {"scalarized_intersection", to_json(reg.scalarized)},
           {"SR", reg.SR},
           {"WR", reg.WR}};
    if (d.t_star) j["t_star"] = to_json(*d.t_star);
    if (!d.diagnostic.empty()) j["diagnostic"] = d.diagnostic;
    return j;
  }

  Json check_vi(const Json& t, const std::string& where) {
    const SetFunction& f = function(str_field(t, "function", where), where);
    Vec x0 = io::vec_from_json(field(t, "x0", where), f.xdim());
    auto pts = grid(t, "grid", f.xdim(), where);
    std::vector<Vec> dirs = directions(t, "directions", f.ws());
    std::vector<Ineq> ids;
    const Json& list = t.contains("ineqs") ? t["ineqs"] : Json("all");
    if (list == "all") {
      ids = all_ineqs();
    } else {
      for (const auto& s : list) {
        auto id = parse_ineq(s.get<std::string>());
        if (!id) invalid(where + ": unknown inequality " + s.dump());
        ids.push_back(*id);
      }
    }
    std::vector<Vec> canon;
    for (const auto& z : dirs) canon.push_back(f.ws().canonical_direction(z));
    std::vector<Vec> finite = t.contains("finite_directions") ? io::vecs_from_json(t["finite_directions"], f.ws().dim()) : canon;
    for (auto& z : finite) z = f.ws().canonical_direction(z);
    std::vector<Vec> merged = canon;
    for (const auto& z : finite)
      if (std::find(merged.begin(), merged.end(), z) == merged.end()) merged.push_back(z);
    Analysis a = analyze(f, x0, pts, merged, opt_.jobs);
    Json out = Json::array();
    for (Ineq id : ids) out.push_back(vi_json(evaluate(a, id, finite)));
    return Json{{"reports", out}, {"space_size", pts.size()}};
  }

  Json audit(const Json& t, const std::string& where, std::vector<std::string>& fail, std::string& matrix) {
    const SetFunction& f = function(str_field(t, "function", where), where);
    Vec x0 = io::vec_from_json(field(t, "x0", where), f.xdim());
    auto pts = grid(t, "grid", f.xdim(), where);
    std::vector<Vec> finite = directions(t, "finite_directions", f.ws());
    AuditReport r = implication_audit(f, x0, pts, finite, opt_.jobs);
    Json imps = Json::array();
    std::ostringstream m;
    m << "        implication matrix at x0 = " << to_string(x0) << " (" << r.space.size() << " candidates)\n";
    for (const auto& i : r.implications) {
      imps.push_back(Json{{"name", i.name}, {"premise", i.premise}, {"conclusion", i.conclusion}, {"status", i.status}});
      std::string name = i.name;
      name.resize(std::max<std::size_t>(name.size(), 34), ' ');
      m << "          " << name << " " << (i.premise ? "T" : "F") << " => " << (i.conclusion ? "T" : "F") << "  "
        << i.status << "\n";
      if (i.status == "violated") fail.push_back("implication violated: " + i.name);
    }
    matrix = m.str();
    Json reports = Json::array();
    for (const auto& v : r.reports) reports.push_back(vi_json(v));
    return Json{{"exact", r.exact},
                {"violations", r.violations},
                {"space_size", r.space.size()},
                {"implications", imps},
                {"reports", reports},
                {"lattice_lsc", r.lattice_lsc},
                {"cminus_lsc", r.cminus_lsc_full},
                {"SR", r.sr_base && r.sr_cand},
                {"WR", r.wr_base && r.wr_cand}};
  }

  Json minimal(const Json& t, const std::string& where, std::vector<std::string>& fail) {
    const SetFunction& f = function(str_field(t, "function", where), where);
    auto pts = grid(t, "grid", f.xdim(), where);
    MinimalOptions mo;
    mo.escape = t.value("escape", false);
    std::vector<Vec> dirs = directions(t, "directions", f.ws());
    Json out = Json::array();
    Json minimal_points = Json::array();
    for (const auto& x : bases(t, pts, f.xdim())) {
      if (!f.in_domain(x)) continue;
      MinimalReport r = minimal_check(f, x, pts, dirs, mo);
      if (!r.consistent && f.exact()) fail.push_back("minimality conditions disagree at x0 = " + to_string(x));
      if (r.a) minimal_points.push_back(to_json(x));
      out.push_back(Json{{"x0", to_json(x)},
                         {"minimal", r.a},
                         {"conditions", Json{{"a", r.a}, {"b", r.b}, {"c", r.c}, {"d", r.d}, {"e", r.e}}},
                         {"consistent", r.consistent},
                         {"dominators", witnesses_json(r.dominators)}});
    }
    return Json{{"points", out}, {"minimal_points", minimal_points}, {"count", minimal_points.size()}};
  }

  Json infimum(const Json& t, const std::string& where, std::vector<std::string>& fail) {
    const SetFunction& f = function(str_field(t, "function", where), where);
    auto pts = grid(t, "grid", f.xdim(), where);
    std::vector<Vec> dirs = directions(t, "directions", f.ws());
    Json out = Json::array();
    for (const auto& x : bases(t, pts, f.xdim())) {
      if (!f.in_domain(x)) continue;
      InfimumReport r = infimum_at_point_check(f, x, pts, dirs);
      if (!r.consistent && f.exact()) fail.push_back("infimum conditions disagree at x0 = " + to_string(x));
      out.push_back(Json{{"x0", to_json(x)},
                         {"infimum_attained", r.a},
                         {"conditions", Json{{"a", r.a}, {"b", r.b}, {"c", r.c}, {"d", r.d}, {"e", r.e}, {"f", r.f}}},
                         {"consistent", r.consistent},
                         {"infimum", to_json(r.infimum)}});
    }
    return Json{{"points", out}};
  }

  Json solution(const std::string& op, const Json& t, const std::string& where) {
    const SetFunction& f = function(str_field(t, "function", where), where);
    CandidateSpace space;
    space.points = grid(t, "grid", f.xdim(), where);
    if (t.contains("region")) space.region = translation_from_json(t["region"], f.xdim(), where);
    Translation M = translation_from_json(field(t, "M", where), f.xdim(), where);
    std::vector<Vec> dirs = directions(t, "directions", f.ws());
    if (op == "infimizer") return infimizer_json(infimizer_check(f, M, space, dirs));
    MinimalOptions mo;
    mo.escape = t.value("escape", false);
    SolutionReport r = solution_check(f, M, space, dirs, mo);
    Json members = Json::array();
    for (std::size_t i = 0; i < r.members.size(); ++i)
      members.push_back(Json{{"x", to_json(r.members[i])}, {"minimal", static_cast<bool>(r.minimal[i])}});
    return Json{{"infimizer", infimizer_json(r.infimizer)}, {"members", members}, {"solution", r.solution}};
  }

  Json efficient(const Json& t, const std::string& where, std::vector<std::string>& fail) {
    const VectorFunction& psi = vector(str_field(t, "vector", where), where);
    EfficiencyReport r = efficient_set(psi, grid(t, "grid", psi.xdim(), where));
    Json pts = Json::array(), eff = Json::array();
    for (std::size_t i = 0; i < r.points.size(); ++i) {
      pts.push_back(Json{{"x", to_json(r.points[i])},
                         {"value", to_json(psi.eval(r.points[i]))},
                         {"efficient", static_cast<bool>(r.efficient[i])},
                         {"minimal", static_cast<bool>(r.minimal[i])}});
      if (r.efficient[i]) eff.push_back(to_json(r.points[i]));
    }
    if (psi.exact() && !r.bridge) fail.push_back("efficiency and minimality of psi^C disagree");
    if (psi.exact() && !r.identity) fail.push_back("union of minimal values differs from Eff + C");
    return Json{{"points", pts},
                {"efficient_points", eff},
                {"bridge", r.bridge},
                {"identity", r.identity},
                {"solution_exists", r.solution_exists}};
  }

  Json vdini(const Json& t, const std::string& where, std::vector<std::string>& fail) {
    const VectorFunction& psi = vector(str_field(t, "vector", where), where);
    Vec x0 = io::vec_from_json(field(t, "x0", where), psi.xdim());
    Vec u = io::vec_from_json(field(t, "u", where), psi.xdim());
    DiniLimitSet d = vector_dini(psi, x0, u);
    DiniClassification c = classify_dini(psi, x0, add(x0, u), d, directions(t, "directions", psi.ws()));
    if (!(c.a && c.b && c.c))
      for (const auto& n : c.notes) fail.push_back("limit classification: " + n);
    Json lim = Json::array();
    for (const auto& z : d.finite_points) lim.push_back(Json{{"tag", "fin"}, {"z", to_json(z)}});
    for (const auto& z : d.infinite_dirs) lim.push_back(Json{{"tag", "inf"}, {"z", to_json(z)}});
    Json j{{"limits", lim},
           {"exact", d.exact},
           {"classification", Json{{"a", c.a}, {"b", c.b}, {"c", c.c}, {"notes", c.notes}}}};
    if (!d.diagnostic.empty()) j["diagnostic"] = d.diagnostic;
    return j;
  }

  Json minty(const Json& t, const std::string& where, std::vector<std::string>& fail) {
    const VectorFunction& psi = vector(str_field(t, "vector", where), where);
    Vec x0 = io::vec_from_json(field(t, "x0", where), psi.xdim());
    auto pts = grid(t, "grid", psi.xdim(), where);
    std::vector<Vec> mstar = t.contains("mstar") ? io::vecs_from_json(t["mstar"], psi.ws().dim()) : psi.ws().cone().facet_normals();
    std::vector<Q> tset{Q(1, 8), Q(1, 4), Q(1, 2), Q(3, 4)};
    if (t.contains("tset")) {
      tset.clear();
      for (const auto& q : t["tset"]) tset.push_back(io::rat_from_json(q));
    }
    MintyReport r = vector_minty_check(psi, x0, pts, mstar, tset);
    if (r.exact) {
      if (r.efficient != r.finite_form) fail.push_back("finite-normal Minty form disagrees with efficiency");
      if (r.efficient != r.set_form) fail.push_back("MVI_M disagrees with efficiency");
      if (is_quadrant(psi.ws().cone())) {
        if (r.efficient != r.inner_form) fail.push_back("inner Minty form disagrees with efficiency");
        if (r.efficient != r.scalar_form) fail.push_back("scalar Minty form disagrees with efficiency");
        if (!r.single_valued) fail.push_back("Dini derivative not single valued");
      }
    }
    Json ts = Json::array();
    for (const auto& q : tset) ts.push_back(to_json(q));
    return Json{{"efficient", r.efficient},
                {"scalar_form", r.scalar_form},
                {"inner_form", r.inner_form},
                {"set_form", r.set_form},
                {"finite_form", r.finite_form},
                {"single_valued", r.single_valued},
                {"scalar_finite", r.scalar_finite},
                {"exact", r.exact},
                {"tset", ts},
                {"points_checked", r.points.size()},
                {"witnesses", witnesses_json(r.witnesses)}};
  }

  Json trail(const Json& t, const std::string& where) {
    WorkspacePtr ws = ws_ ? ws_ : builtins::quadrant();
    PolyTrail tr;
    const Json& comps = field(t, "components", where);
    if (comps == "infdir_example") {
      tr = builtins::infdir_example_trail();
    } else {
      for (const auto& c : comps) {
        std::vector<Q> coeffs;
        for (const auto& q : c) coeffs.push_back(io::rat_from_json(q));
        tr.comps.push_back(coeffs);
      }
    }
    TrailLimits l = trail_limits(*ws, tr);
    if (t.contains("store")) store(t, ws, l.limsup_plus_cone);
    return Json{{"limsup", Json{{"tag", l.limsup.infinite ? "inf" : "fin"}, {"z", to_json(l.limsup.z)}}},
                {"limsup_plus_cone", to_json(l.limsup_plus_cone)},
                {"lattice_liminf", to_json(l.lattice_liminf)},
                {"lattice_limsup", to_json(l.lattice_limsup)},
                {"lattice_converges", l.lattice_converges},
                {"commutes", l.commutes}};
  }

  void collect_plot(ScenarioRun& out) const {
    if (!sc_.contains("plot")) return;
    for (const auto& n : sc_["plot"]) {
      if (!n.is_string()) invalid("\"plot\" entries must be names");
      std::string name = n.get<std::string>();
      if (auto it = sets_.find(name); it != sets_.end()) {
        out.plot_ws = ws_;
        out.plot_sets.emplace_back(name, it->second);
      } else if (auto st = stored_.find(name); st != stored_.end()) {
        out.plot_ws = st->second.first;
        out.plot_sets.emplace_back(name, st->second.second);
      } else {
        invalid("plot: unknown set " + name);
      }
    }
  }

  const Json& sc_;
  RunOptions opt_;
  std::string name_;
  Q tolerance_;
  WorkspacePtr ws_;
  std::map<std::string, SetFunction> funcs_;
  std::map<std::string, VectorFunction> vecs_;
  std::map<std::string, UpperSet> sets_;
  std::map<std::string, std::vector<Vec>> grids_;
  std::map<std::string, std::pair<WorkspacePtr, UpperSet>> stored_;
};

}  // namespace

Json parse_scenario(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    invalid(std::string("malformed JSON: ") + e.what());
  }
}

Json load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) invalid("cannot read scenario file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

ScenarioRun run_scenario(const Json& scenario, const RunOptions& opt) {
  try {
    return Runner(scenario, opt).run();
  } catch (const Json::exception& e) {
    invalid(std::string("scenario has the wrong shape: ") + e.what());
  }
}

}  // namespace setopt
