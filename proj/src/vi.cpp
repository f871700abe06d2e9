#include "setopt/vi.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "setopt/error.hpp"

namespace setopt {

namespace {

const std::vector<std::pair<Ineq, const char*>>& names() {
  static const std::vector<std::pair<Ineq, const char*>> n{
      {Ineq::svi_I, "svi_I"}, {Ineq::SVI_I, "SVI_I"}, {Ineq::mvi_I, "mvi_I"},   {Ineq::MVI_I, "MVI_I"},
      {Ineq::svi_M, "svi_M"}, {Ineq::SVI_M, "SVI_M"}, {Ineq::svi_M2, "svi_M2"}, {Ineq::mvi_M, "mvi_M"},
      {Ineq::MVI_M, "MVI_M"}, {Ineq::mvi_M_finite, "mvi_M_finite"}};
  return n;
}

template <class Fn>
void parallel_for(std::size_t n, int jobs, Fn fn) {
  if (jobs <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex m;
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(m);
        if (!err) err = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int j = 0; j < std::min<int>(jobs, static_cast<int>(n)); ++j) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

// Equality of extended reals, with slack for sampled values.
bool ext_close(const ExtReal& a, const ExtReal& b, const Q& tol) {
  if (a.finite() && b.finite()) return abs_q(a.value() - b.value()) <= tol;
  return a == b;
}

void regularity(const Workspace& ws, const std::vector<Vec>& dirs, const DerivativeResult& d,
                const std::vector<ScalarDini>& s, const Q& tol, bool& sr, bool& wr) {
  std::vector<UpperSet> hs;
  sr = true;
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    sr = sr && ext_close(neg_support(dirs[k], d.value), s[k].value, tol);
    hs.push_back(level_halfspace(ws, dirs[k], s[k].value));
  }
  wr = set_equal(d.value, sup_family(ws, hs));
}

bool vec_less(const Vec& a, const Vec& b) { return lex_less(a, b); }

}  // namespace

const char* ineq_name(Ineq id) {
  for (const auto& [k, v] : names())
    if (k == id) return v;
  return "?";
}

std::optional<Ineq> parse_ineq(const std::string& s) {
  for (const auto& [k, v] : names())
    if (s == v) return k;
  return std::nullopt;
}

const std::vector<Ineq>& all_ineqs() {
  static const std::vector<Ineq> all = [] {
    std::vector<Ineq> v;
    for (const auto& [k, n] : names()) v.push_back(k);
    return v;
  }();
  return all;
}

std::vector<Vec> full_directions(const SetFunction& f, const std::vector<Vec>& extra) {
  std::vector<Vec> e = extra;
  if (const auto* P = f.param_poly_data())
    for (const auto& n : P->normals) e.push_back(n);
  return f.ws().merged_directions(e);
}

Analysis analyze(const SetFunction& f, const Vec& x0, const std::vector<Vec>& space, const std::vector<Vec>& dirs,
                 int jobs, bool derivatives) {
  if (dirs.empty()) throw Error(ErrorCode::InvalidArgument, "direction set is empty");
  Analysis a;
  a.ws = f.ws_ptr();
  const Workspace& ws = *a.ws;
  a.x0 = x0;
  a.base = f.eval(x0);
  if (a.base.empty) throw Error(ErrorCode::BaseOutsideDomain, "base point " + to_string(x0) + " is outside dom f");
  a.base_rec = recession(ws, a.base);
  a.dirs = dirs;
  a.exact = f.exact();
  for (const auto& z : dirs) a.phi0.push_back(neg_support(z, a.base));
  a.cands.resize(space.size());
  const Q tol = f.tolerance();
  parallel_for(space.size(), jobs, [&](std::size_t i) {
    CandidateData& c = a.cands[i];
    c.x = space[i];
    c.value = f.eval(c.x);
    c.in_dom = !c.value.empty;
    c.equals_base = set_equal(c.value, a.base);
    for (const auto& z : dirs) c.phi.push_back(neg_support(z, c.value));
    if (!derivatives) return;
    Vec u = sub(c.x, x0);
    c.d_base = set_derivative(f, x0, u);
    c.d_cand = set_derivative(f, c.x, neg(u));
    for (const auto& z : dirs) {
      c.s_base.push_back(scalar_dini(f, z, x0, u));
      c.s_cand.push_back(scalar_dini(f, z, c.x, neg(u)));
    }
    regularity(ws, dirs, c.d_base, c.s_base, tol, c.sr_base, c.wr_base);
    regularity(ws, dirs, c.d_cand, c.s_cand, tol, c.sr_cand, c.wr_cand);
  });
  return a;
}

ViReport evaluate(const Analysis& a, Ineq id, const std::vector<Vec>& finite) {
  ViReport r;
  r.id = id;
  r.exact = a.exact;
  const auto& dirs = a.dirs;
  std::vector<bool> allowed(dirs.size(), true);
  if (id == Ineq::mvi_M_finite) {
    for (std::size_t k = 0; k < dirs.size(); ++k)
      allowed[k] = std::find(finite.begin(), finite.end(), dirs[k]) != finite.end();
    for (const auto& z : finite)
      if (std::find(dirs.begin(), dirs.end(), z) == dirs.end())
        throw Error(ErrorCode::InvalidArgument, "finite direction " + to_string(z) + " was not analysed");
  }
  const bool base_all = a.base.is_all();
  bool alt_agree = true;
  for (std::size_t i = 0; i < a.cands.size(); ++i) {
    const CandidateData& c = a.cands[i];
    auto fail = [&](std::optional<Vec> z, std::string note) {
      r.witnesses.push_back(Witness{i, c.x, std::move(z), std::nullopt, std::move(note)});
    };
    switch (id) {
      case Ineq::svi_I:
        for (std::size_t k = 0; k < dirs.size(); ++k)
          if (!a.phi0[k].is_minus_inf() && c.s_base[k].value < ExtReal(0)) fail(dirs[k], "negative scalar derivative");
        break;
      case Ineq::SVI_I:
        if (!leq(a.base_rec, c.d_base.value)) fail(std::nullopt, "derivative not inside 0+f(x0)");
        break;
      case Ineq::mvi_I:
        for (std::size_t k = 0; k < dirs.size(); ++k)
          if (c.s_cand[k].value > ExtReal(0)) fail(dirs[k], "positive scalar derivative toward x0");
        break;
      case Ineq::MVI_I:
        if (!contains_point(c.d_cand.value, zeros(a.ws->dim()))) fail(std::nullopt, "0 not in f'(x, x0 - x)");
        break;
      case Ineq::svi_M:
      case Ineq::SVI_M:
      case Ineq::svi_M2: {
        if (base_all || !c.in_dom || c.equals_base) break;
        if (id == Ineq::SVI_M) {
          bool ok = !contains_point(c.d_base.value, zeros(a.ws->dim()));
          bool alt = !contains_point(add(*a.ws, c.d_base.value, a.base_rec), zeros(a.ws->dim()));
          alt_agree = alt_agree && (ok == alt);
          if (!ok) fail(std::nullopt, "0 in f'(x0, x - x0)");
          break;
        }
        bool found = false;
        for (std::size_t k = 0; k < dirs.size() && !found; ++k) {
          found = c.s_base[k].value > ExtReal(0);
          if (id == Ineq::svi_M2) found = found || (a.phi0[k].is_minus_inf() && !c.phi[k].is_minus_inf());
        }
        if (!found) fail(std::nullopt, "no direction with positive scalar derivative");
        break;
      }
      case Ineq::mvi_M:
      case Ineq::mvi_M_finite: {
        if (c.equals_base) break;
        bool found = false;
        for (std::size_t k = 0; k < dirs.size() && !found; ++k)
          found = allowed[k] && !c.phi[k].is_minus_inf() && c.s_cand[k].value < ExtReal(0);
        if (!found) fail(std::nullopt, "no direction with negative scalar derivative toward x0");
        break;
      }
      case Ineq::MVI_M:
        if (c.equals_base) break;
        if (leq(recession(*a.ws, c.value), c.d_cand.value)) fail(std::nullopt, "f'(x, x0 - x) inside 0+f(x)");
        break;
    }
  }
  if (id == Ineq::SVI_M) r.alt_form_agrees = alt_agree;
  r.holds = r.witnesses.empty();
  return r;
}

ViReport check(const SetFunction& f, Ineq id, const Vec& x0, const std::vector<Vec>& space,
               const std::vector<Vec>& mstar, int jobs) {
  std::vector<Vec> dirs;
  for (const auto& z : mstar) dirs.push_back(f.ws().canonical_direction(z));
  if (id == Ineq::mvi_M_finite) return evaluate(analyze(f, x0, space, dirs, jobs), id, dirs);
  return evaluate(analyze(f, x0, space, dirs, jobs), id);
}

InfimumReport infimum_at_point(const Analysis& a) {
  const Workspace& ws = *a.ws;
  InfimumReport r;
  std::vector<UpperSet> vals{a.base};
  for (const auto& c : a.cands) vals.push_back(c.value);
  r.infimum = inf_family(ws, vals);
  r.a = set_equal(r.infimum, a.base);
  for (std::size_t i = 0; i < a.cands.size(); ++i) {
    const CandidateData& c = a.cands[i];
    bool wb = true, wc = true, we = true;
    for (std::size_t k = 0; k < a.dirs.size(); ++k) {
      wb = wb && a.phi0[k] <= c.phi[k];
      wc = wc && residual(a.phi0[k], c.phi[k]) <= ExtReal(0);
      we = we && (a.phi0[k].is_minus_inf() || residual(c.phi[k], a.phi0[k]) >= ExtReal(0));
    }
    bool wd = contains_point(residual_diff(ws, a.base, c.value), zeros(ws.dim()));
    bool wf = leq(a.base_rec, residual_diff(ws, c.value, a.base));
    r.b = r.b && wb;
    r.c = r.c && wc;
    r.d = r.d && wd;
    r.e = r.e && we;
    r.f = r.f && wf;
    if (!wd) r.witnesses.push_back(Witness{i, c.x, std::nullopt, std::nullopt, "0 not in f(x0) - f(x)"});
  }
  r.consistent = r.a == r.b && r.b == r.c && r.c == r.d && r.d == r.e && (!r.e || r.f);
  return r;
}

InfimumReport infimum_at_point_check(const SetFunction& f, const Vec& x0, const std::vector<Vec>& space,
                                     const std::vector<Vec>& mstar) {
  return infimum_at_point(analyze(f, x0, space, full_directions(f, mstar), 1, false));
}

MinimalReport minimal_from(const Analysis& a) {
  const Workspace& ws = *a.ws;
  MinimalReport r;
  for (std::size_t i = 0; i < a.cands.size(); ++i) {
    const CandidateData& c = a.cands[i];
    if (c.equals_base) continue;
    if (leq(c.value, a.base)) {
      r.a = false;
      r.dominators.push_back(Witness{i, c.x, std::nullopt, std::nullopt, "strictly smaller value"});
    }
    bool wb = false, wc = false, wd = false;
    for (std::size_t k = 0; k < a.dirs.size(); ++k) {
      wb = wb || a.phi0[k] < c.phi[k];
      wc = wc || (!c.phi[k].is_minus_inf() && residual(a.phi0[k], c.phi[k]) < ExtReal(0));
      wd = wd || residual(c.phi[k], a.phi0[k]) > ExtReal(0);
    }
    r.b = r.b && wb;
    r.c = r.c && wc;
    r.d = r.d && wd;
    r.e = r.e && !contains_point(residual_diff(ws, c.value, a.base), zeros(ws.dim()));
  }
  r.consistent = r.a == r.b && r.b == r.c && r.c == r.d && r.d == r.e;
  return r;
}

MinimalReport minimal_check(const SetFunction& f, const Vec& x0, const std::vector<Vec>& space,
                            const std::vector<Vec>& mstar, const MinimalOptions& opt) {
  std::vector<Vec> pts = space, probes;
  if (opt.escape) {
    for (int j = 0; j < f.xdim(); ++j)
      for (const auto& s : opt.scales)
        for (int sign : {1, -1}) probes.push_back(add(x0, scale(Q(sign) * s, unit(f.xdim(), j))));
    pts.insert(pts.end(), probes.begin(), probes.end());
  }
  MinimalReport r = minimal_from(analyze(f, x0, pts, full_directions(f, mstar), 1, false));
  r.probes = probes;
  return r;
}

InfimizerReport infimizer_check(const SetFunction& f, const Translation& M, const CandidateSpace& space,
                                const std::vector<Vec>& mstar) {
  const Workspace& ws = f.ws();
  InfimizerReport r;
  const Vec zero = zeros(f.xdim());
  if (space.region) {
    TranslationResult t = inf_translation(f, *space.region, zero);
    r.inf_space = t.value;
    r.exact = t.exact;
  } else {
    if (space.points.empty()) throw Error(ErrorCode::EmptyGrid, "candidate space is empty");
    std::vector<UpperSet> vals;
    for (const auto& p : space.points) vals.push_back(f.eval(p));
    r.inf_space = inf_family(ws, vals);
    r.exact = f.exact();
  }
  TranslationResult tm = inf_translation(f, M, zero);
  r.fhat_M = tm.value;
  Translation co = M;
  co.kind = Translation::Kind::Polyhedron;
  TranslationResult tc = inf_translation(f, co, zero);
  r.fhat_coM = tc.value;
  r.exact = r.exact && tm.exact && tc.exact;
  r.infimizer = set_equal(r.fhat_M, r.inf_space);
  r.co_equal = set_equal(r.fhat_M, r.fhat_coM);
  if (f.variant() == SetFunction::Variant::ParamPoly && f.xdim() <= 2) {
    SetFunction g = translated_function(f, co);
    if (!g.eval(zero).empty) {
      std::vector<Vec> U;
      for (int j = 0; j < f.xdim(); ++j) {
        U.push_back(unit(f.xdim(), j));
        U.push_back(neg(unit(f.xdim(), j)));
      }
      if (f.xdim() == 2)
        for (int a : {1, -1})
          for (int b : {1, -1}) U.push_back(Vec{Q(a), Q(b)});
      for (const auto& p : space.points)
        if (!is_zero(p)) U.push_back(p);
      r.translated_svi_I = check(g, Ineq::svi_I, zero, U, full_directions(g, mstar)).holds;
    }
  }
  return r;
}

SolutionReport solution_check(const SetFunction& f, const Translation& M, const CandidateSpace& space,
                              const std::vector<Vec>& mstar, const MinimalOptions& opt) {
  SolutionReport r;
  r.infimizer = infimizer_check(f, M, space, mstar);
  std::set<Vec, decltype(&vec_less)> seen(&vec_less);
  auto add_member = [&](const Vec& v) {
    if (seen.insert(v).second) r.members.push_back(v);
  };
  for (const auto& p : M.points) add_member(p);
  if (M.kind == Translation::Kind::Polyhedron) {
    PolyData P = poly_from_vrep(f.xdim(), M.points, M.rays);
    for (const auto& p : space.points) {
      bool inside = !P.empty;
      for (const auto& h : P.H) inside = inside && dot(h.n, p) <= h.b;
      if (inside) add_member(p);
    }
  }
  bool all_min = true;
  for (const auto& m : r.members) {
    bool ok = f.in_domain(m) && !f.eval(m).empty && minimal_check(f, m, space.points, mstar, opt).a;
    r.minimal.push_back(ok);
    all_min = all_min && ok;
  }
  r.solution = r.infimizer.infimizer && all_min;
  return r;
}

std::vector<Vec> star_space(const SetFunction& f, const Vec& x0, const std::vector<Vec>& grid) {
  std::set<Vec, decltype(&vec_less)> seen(&vec_less);
  std::vector<Vec> out;
  auto push = [&](const Vec& v) {
    if (seen.insert(v).second) out.push_back(v);
  };
  push(x0);
  for (const auto& x : grid) {
    if (x == x0) continue;
    Vec u = sub(x, x0);
    std::vector<Q> marks{Q(0)};
    if (f.exact()) {
      for (const auto& t : f.event_times(x0, u, ExtReal(1))) marks.push_back(t);
    }
    marks.push_back(Q(1));
    for (std::size_t i = 1; i < marks.size(); ++i) {
      push(add(x0, scale((marks[i - 1] + marks[i]) / 2, u)));
      push(add(x0, scale(marks[i], u)));
    }
  }
  return out;
}

namespace {

Implication imp(const std::string& name, bool premise, bool conclusion, bool exact) {
  Implication i{name, premise, conclusion, ""};
  if (!premise) i.status = "vacuous";
  else if (conclusion) i.status = "ok";
  else i.status = exact ? "violated" : "inconclusive";
  return i;
}

}  // namespace

AuditReport implication_audit(const SetFunction& f, const Vec& x0, const std::vector<Vec>& grid,
                              const std::vector<Vec>& finite_dirs, int jobs) {
  AuditReport R;
  const Workspace& ws = f.ws();
  for (const auto& z : finite_dirs.empty() ? ws.directions() : finite_dirs)
    R.finite_dirs.push_back(ws.canonical_direction(z));
  R.full_dirs = full_directions(f, R.finite_dirs);
  if (!f.in_domain(x0) || f.eval(x0).empty)
    throw Error(ErrorCode::BaseOutsideDomain, "base point " + to_string(x0) + " is outside dom f");
  R.space = star_space(f, x0, grid);
  Analysis A = analyze(f, x0, R.space, R.full_dirs, jobs);
  R.exact = A.exact;
  for (Ineq id : all_ineqs()) R.reports.push_back(evaluate(A, id, R.finite_dirs));
  auto holds = [&](Ineq id) {
    for (const auto& r : R.reports)
      if (r.id == id) return r.holds;
    return false;
  };
  R.infimum = infimum_at_point(A);
  R.minimal = minimal_from(A);

  bool sr_wr = true;
  for (const auto& c : A.cands) {
    sr_wr = sr_wr && (!c.sr_base || c.wr_base) && (!c.sr_cand || c.wr_cand);
    R.sr_base = R.sr_base && c.sr_base;
    R.wr_base = R.wr_base && c.wr_base;
    R.sr_cand = R.sr_cand && c.sr_cand;
    R.wr_cand = R.wr_cand && c.wr_cand;
    if (c.x == x0) continue;
    R.lattice_lsc = R.lattice_lsc && lattice_lsc_probe(f, x0, c.x).holds;
    R.cminus_lsc_full = R.cminus_lsc_full && cminus_lsc_probe(f, x0, c.x, R.full_dirs).holds;
    R.cminus_lsc_finite = R.cminus_lsc_finite && cminus_lsc_probe(f, x0, c.x, R.finite_dirs).holds;
  }

  // mvi_M per candidate against the segment characterization
  if (f.exact()) {
    const ViReport* mv = nullptr;
    for (const auto& r : R.reports)
      if (r.id == Ineq::mvi_M) mv = &r;
    std::vector<bool> fails(A.cands.size(), false);
    for (const auto& w : mv->witnesses) fails[w.index] = true;
    for (std::size_t i = 0; i < A.cands.size(); ++i) {
      const auto& c = A.cands[i];
      if (!c.in_dom || c.equals_base) continue;
      Translation seg{Translation::Kind::Polyhedron, {x0, c.x}, {}};
      UpperSet lo = inf_translation(f, seg, zeros(f.xdim())).value;
      bool chr = leq(lo, c.value) && !set_equal(lo, c.value);
      R.segment_char = R.segment_char && (chr == !fails[i]);
    }
  }

  const bool ex = R.exact;
  const bool inf = R.infimum.a, mini = R.minimal.a;
  auto& I = R.implications;
  I.push_back(imp("svi_I => SVI_I", holds(Ineq::svi_I), holds(Ineq::SVI_I), ex));
  I.push_back(imp("SVI_I + SR => svi_I", holds(Ineq::SVI_I) && R.sr_base, holds(Ineq::svi_I), ex));
  I.push_back(imp("MVI_I => mvi_I", holds(Ineq::MVI_I), holds(Ineq::mvi_I), ex));
  I.push_back(imp("mvi_I + WR => MVI_I", holds(Ineq::mvi_I) && R.wr_cand, holds(Ineq::MVI_I), ex));
  I.push_back(imp("svi_M => SVI_M", holds(Ineq::svi_M), holds(Ineq::SVI_M), ex));
  I.push_back(imp("SVI_M + WR => svi_M", holds(Ineq::SVI_M) && R.wr_base, holds(Ineq::svi_M), ex));
  I.push_back(imp("MVI_M => mvi_M", holds(Ineq::MVI_M), holds(Ineq::mvi_M), ex));
  I.push_back(imp("mvi_M + SR => MVI_M", holds(Ineq::mvi_M) && R.sr_cand, holds(Ineq::MVI_M), ex));
  I.push_back(imp("svi_I => infimum", holds(Ineq::svi_I), inf, ex));
  I.push_back(imp("infimum => svi_I", inf, holds(Ineq::svi_I), ex));
  I.push_back(imp("infimum => MVI_I", inf, holds(Ineq::MVI_I), ex));
  I.push_back(imp("infimum => lattice lsc", inf, R.lattice_lsc, ex));
  I.push_back(imp("MVI_I + lattice lsc => infimum", holds(Ineq::MVI_I) && R.lattice_lsc, inf, ex));
  I.push_back(imp("mvi_I + C- lsc => infimum", holds(Ineq::mvi_I) && R.cminus_lsc_full, inf, ex));
  I.push_back(imp("SVI_M => minimal", holds(Ineq::SVI_M), mini, ex));
  I.push_back(imp("svi_M2 => minimal", holds(Ineq::svi_M2), mini, ex));
  I.push_back(imp("svi_M => svi_M2", holds(Ineq::svi_M), holds(Ineq::svi_M2), ex));
  I.push_back(imp("minimal => mvi_M", mini, holds(Ineq::mvi_M), ex));
  I.push_back(imp("mvi_M_finite + M* lsc => minimal", holds(Ineq::mvi_M_finite) && R.cminus_lsc_finite, mini, ex));
  I.push_back(imp("SR => WR at every candidate", true, sr_wr, ex));
  I.push_back(imp("infimum conditions agree", true, R.infimum.consistent, ex));
  I.push_back(imp("minimality conditions agree", true, R.minimal.consistent, ex));
  const ViReport* svm = nullptr;
  for (const auto& r : R.reports)
    if (r.id == Ineq::SVI_M) svm = &r;
  I.push_back(imp("SVI_M intersection form agrees", true, svm->alt_form_agrees.value_or(true), ex));
  if (f.exact()) I.push_back(imp("mvi_M <=> segment characterization", true, R.segment_char, ex));
  for (const auto& i : I) R.violations += i.status == "violated";
  return R;
}

}  // namespace setopt
