#include "setopt/setfun.hpp"

#include <algorithm>

#include "setopt/error.hpp"
#include "setopt/fm.hpp"

namespace setopt {

Q ConcavePWL::eval(const Vec& x) const {
  Q best = pieces.front().eval(x);
  for (const auto& p : pieces) {
    Q v = p.eval(x);
    if (v < best) best = v;
  }
  return best;
}

Q ConvexPWL::eval(const Vec& x) const {
  Q best = pieces.front().eval(x);
  for (const auto& p : pieces) {
    Q v = p.eval(x);
    if (v > best) best = v;
  }
  return best;
}

bool XPolyhedron::contains(const Vec& x) const {
  for (const auto& r : rows)
    if (dot(r.n, x) > r.b) return false;
  return true;
}

ExtReal XPolyhedron::exit_time(const Vec& x, const Vec& u) const {
  ExtReal t = ExtReal::plus_inf();
  for (const auto& r : rows) {
    Q s = dot(r.n, u);
    if (s > 0) {
      Q slack = r.b - dot(r.n, x);
      t = min(t, ExtReal(Q(slack < 0 ? Q(0) : Q(slack / s))));
    }
  }
  return t;
}

Vec segment_point(const Vec& x0, const Vec& x, const Q& t) { return add(x0, scale(t, sub(x, x0))); }

namespace {

void check_xdim(int xdim, const Vec& v, const char* what) {
  if (static_cast<int>(v.size()) != xdim) throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has wrong dimension");
}

void check_domain(int xdim, const XPolyhedron& S) {
  for (const auto& r : S.rows) check_xdim(xdim, r.n, "domain row");
}

// Values and slopes of the affine pieces along x + t u.
struct Line {
  Q v, s;
  Q at(const Q& t) const { return v + s * t; }
};

std::vector<Line> lines_along(const std::vector<Affine>& pieces, const Vec& x, const Vec& u) {
  std::vector<Line> out;
  for (const auto& p : pieces) out.push_back({p.eval(x), dot(p.a, u)});
  return out;
}

// Kinks in (0, T) of min (concave) or max (convex) of the lines.
void kinks(const std::vector<Line>& ls, bool concave, const ExtReal& T, std::vector<Q>& out) {
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      if (ls[i].s == ls[j].s) continue;
      Q t = (ls[j].v - ls[i].v) / (ls[i].s - ls[j].s);
      if (t <= 0 || ExtReal(t) >= T) continue;
      Q val = ls[i].at(t);
      bool extreme = true;
      for (const auto& l : ls) {
        Q w = l.at(t);
        if (concave ? w < val : w > val) {
          extreme = false;
          break;
        }
      }
      if (extreme) out.push_back(t);
    }
}

// Slope of the active piece just right of t.
Q active_slope(const std::vector<Line>& ls, const Q& t, bool concave) {
  const Line* best = &ls.front();
  for (const auto& l : ls) {
    Q a = l.at(t), b = best->at(t);
    if (concave ? (a < b || (a == b && l.s < best->s)) : (a > b || (a == b && l.s > best->s))) best = &l;
  }
  return best->s;
}

Q active_value(const std::vector<Line>& ls, const Q& t, bool concave) {
  Q best = ls.front().at(t);
  for (const auto& l : ls) {
    Q a = l.at(t);
    if (concave ? a < best : a > best) best = a;
  }
  return best;
}

void sort_unique(std::vector<Q>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

SetFunction SetFunction::param_poly(WorkspacePtr ws, int xdim, ParamPolyData data, std::string name) {
  if (data.normals.size() != data.offsets.size())
    throw Error(ErrorCode::InvalidArgument, "parampoly needs one offset per normal");
  for (const auto& n : data.normals) {
    if (static_cast<int>(n.size()) != ws->dim()) throw Error(ErrorCode::DimensionMismatch, "normal dimension");
    if (is_zero(n)) throw Error(ErrorCode::InvalidArgument, "normal must be nonzero");
    if (!ws->cone().in_dual(n)) throw Error(ErrorCode::NormalOutsideDualCone, "normal " + to_string(n) + " is not in C^-");
  }
  for (const auto& o : data.offsets) {
    if (o.pieces.empty()) throw Error(ErrorCode::InvalidArgument, "offset needs at least one affine piece");
    for (const auto& p : o.pieces) check_xdim(xdim, p.a, "offset piece");
  }
  check_domain(xdim, data.domain);
  SetFunction f;
  f.variant_ = Variant::ParamPoly;
  f.ws_ = std::move(ws);
  f.xdim_ = xdim;
  f.name_ = std::move(name);
  f.pp_ = std::make_shared<const ParamPolyData>(std::move(data));
  return f;
}

SetFunction SetFunction::epi_vector(WorkspacePtr ws, int xdim, EpiVectorData data, std::string name) {
  if (static_cast<int>(data.components.size()) != ws->dim())
    throw Error(ErrorCode::DimensionMismatch, "epivector needs one component per image coordinate");
  for (const auto& c : data.components) {
    if (c.pieces.empty()) throw Error(ErrorCode::InvalidArgument, "component needs at least one affine piece");
    for (const auto& p : c.pieces) check_xdim(xdim, p.a, "component piece");
  }
  check_domain(xdim, data.domain);
  SetFunction f;
  f.variant_ = Variant::EpiVector;
  f.ws_ = std::move(ws);
  f.xdim_ = xdim;
  f.name_ = std::move(name);
  f.ev_ = std::make_shared<const EpiVectorData>(std::move(data));
  return f;
}

SetFunction SetFunction::oracle(WorkspacePtr ws, int xdim, OracleData data, std::string name) {
  if (!data.eval) throw Error(ErrorCode::InvalidArgument, "oracle needs an evaluator");
  SetFunction f;
  f.variant_ = Variant::Oracle;
  f.ws_ = std::move(ws);
  f.xdim_ = xdim;
  f.name_ = std::move(name);
  f.oracle_ = std::make_shared<const OracleData>(std::move(data));
  return f;
}

bool SetFunction::in_domain(const Vec& x) const {
  check_xdim(xdim_, x, "point");
  switch (variant_) {
    case Variant::ParamPoly: return pp_->domain.contains(x);
    case Variant::EpiVector: return ev_->domain.contains(x);
    default: return !eval(x).empty;
  }
}

UpperSet SetFunction::eval(const Vec& x) const {
  check_xdim(xdim_, x, "point");
  switch (variant_) {
    case Variant::ParamPoly: {
      if (!pp_->domain.contains(x)) return empty_set(*ws_);
      std::vector<Halfspace> H;
      for (std::size_t i = 0; i < pp_->normals.size(); ++i) H.push_back({pp_->normals[i], pp_->offsets[i].eval(x)});
      return canonicalize(*ws_, H);
    }
    case Variant::EpiVector:
      if (!ev_->domain.contains(x)) return empty_set(*ws_);
      return point_plus_cone(*ws_, psi(x));
    default: {
      UpperSet s;
      try {
        s = oracle_->eval(x);
      } catch (const Error&) {
        throw;
      } catch (const std::exception& e) {
        throw Error(ErrorCode::OracleFailure, std::string("oracle failed: ") + e.what());
      }
      if (s.d != ws_->dim()) throw Error(ErrorCode::OracleFailure, "oracle returned a set of the wrong dimension");
      return s;
    }
  }
}

Vec SetFunction::psi(const Vec& x) const {
  if (variant_ != Variant::EpiVector) throw Error(ErrorCode::Unsupported, "psi is defined for epivector functions");
  Vec v;
  for (const auto& c : ev_->components) v.push_back(c.eval(x));
  return v;
}

ExtReal SetFunction::scalarize(const Vec& zstar, const Vec& x) const {
  if (variant_ == Variant::EpiVector) {
    if (!ev_->domain.contains(x)) return ExtReal::plus_inf();
    return ExtReal(Q(-dot(zstar, psi(x))));
  }
  return neg_support(zstar, eval(x));
}

UpperSet SetFunction::level_function(const Vec& zstar, const Vec& x) const {
  return level_halfspace(*ws_, zstar, scalarize(zstar, x));
}

ExtReal SetFunction::exit_time(const Vec& x, const Vec& u) const {
  switch (variant_) {
    case Variant::ParamPoly: return pp_->domain.exit_time(x, u);
    case Variant::EpiVector: return ev_->domain.exit_time(x, u);
    default: throw Error(ErrorCode::Unsupported, "exit time needs a polyhedral domain");
  }
}

std::vector<Q> SetFunction::event_times(const Vec& x, const Vec& u, const ExtReal& t_max) const {
  if (!exact()) throw Error(ErrorCode::Unsupported, "event times need an exact function");
  std::vector<Q> ev;
  if (!in_domain(x)) return ev;
  ExtReal exit = exit_time(x, u);
  ExtReal T = min(t_max, exit);
  if (exit.finite() && exit.value() > 0 && exit < t_max) ev.push_back(exit.value());

  if (variant_ == Variant::EpiVector) {
    for (const auto& c : ev_->components) kinks(lines_along(c.pieces, x, u), false, T, ev);
    sort_unique(ev);
    return ev;
  }

  const auto& N = pp_->normals;
  const std::size_t m = N.size();
  std::vector<std::vector<Line>> L;
  std::vector<Q> breaks;
  for (const auto& o : pp_->offsets) {
    L.push_back(lines_along(o.pieces, x, u));
    kinks(L.back(), true, T, breaks);
  }
  sort_unique(breaks);
  ev.insert(ev.end(), breaks.begin(), breaks.end());

  std::vector<Q> bounds{Q(0)};
  bounds.insert(bounds.end(), breaks.begin(), breaks.end());
  const int d = ws_->dim();
  for (std::size_t seg = 0; seg < bounds.size(); ++seg) {
    const Q lo = bounds[seg];
    ExtReal hi = seg + 1 < bounds.size() ? ExtReal(bounds[seg + 1]) : T;
    if (hi <= ExtReal(lo)) continue;
    Q probe = hi.finite() ? Q((lo + hi.value()) / 2) : Q(lo + 1);
    std::vector<Q> beta(m), gamma(m);
    for (std::size_t i = 0; i < m; ++i) {
      beta[i] = active_value(L[i], lo, true);
      gamma[i] = active_slope(L[i], probe, true);
    }
    auto push = [&](const Q& tau) {
      if (tau <= 0) return;
      Q t = lo + tau;
      if (ExtReal(t) < hi) ev.push_back(t);
    };
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        bool parallel = d == 1 || cross(N[i], N[j]) == 0;
        if (parallel) {
          std::size_t k = N[i][0] != 0 ? 0 : 1;
          Q lam = N[j][k] / N[i][k];
          Q den = gamma[j] - lam * gamma[i];
          if (den != 0) push((lam * beta[i] - beta[j]) / den);
          continue;
        }
        Q det = cross(N[i], N[j]);
        auto solve = [&](const Q& p, const Q& q) { return Vec{(p * N[j][1] - q * N[i][1]) / det, (N[i][0] * q - N[j][0] * p) / det}; };
        Vec v0 = solve(beta[i], beta[j]);
        Vec v1 = solve(gamma[i], gamma[j]);
        for (std::size_t k = 0; k < m; ++k) {
          if (k == i || k == j) continue;
          Q den = dot(N[k], v1) - gamma[k];
          if (den != 0) push((beta[k] - dot(N[k], v0)) / den);
        }
      }
  }
  sort_unique(ev);
  return ev;
}

ExtReal SetFunction::first_event(const Vec& x, const Vec& u) const {
  auto ev = event_times(x, u, ExtReal::plus_inf());
  return ev.empty() ? ExtReal::plus_inf() : ExtReal(ev.front());
}

namespace {

TranslationResult project_param_poly(const SetFunction& f, const Translation& M, const Vec& x) {
  const auto& P = *f.param_poly_data();
  const int d = f.ws().dim(), k = f.xdim();
  if (k > 2) throw Error(ErrorCode::Unsupported, "polyhedral translation sets need dim X <= 2");
  PolyData mp = poly_from_vrep(k, M.points, M.rays);
  std::vector<LinIneq> sys;
  auto row = [&](const Vec& zpart, const Vec& mpart, const Q& b) {
    Vec a = zpart;
    a.insert(a.end(), mpart.begin(), mpart.end());
    sys.push_back({a, b});
  };
  for (std::size_t i = 0; i < P.normals.size(); ++i)
    for (const auto& pc : P.offsets[i].pieces) row(P.normals[i], neg(pc.a), pc.eval(x));
  for (const auto& r : P.domain.rows) row(zeros(d), r.n, r.b - dot(r.n, x));
  for (const auto& h : mp.H) row(zeros(d), h.n, h.b);
  auto proj = fm_project(sys, static_cast<std::size_t>(d));
  if (!proj) return {empty_set(f.ws()), true};
  std::vector<Halfspace> H;
  for (const auto& r : *proj) H.push_back({r.a, r.b});
  return {canonicalize_projected(f.ws(), H), true};
}

TranslationResult hull_epi_vector(const SetFunction& f, const Translation& M, const Vec& x) {
  const auto& E = *f.epi_vector_data();
  const int k = f.xdim();
  if (!M.rays.empty()) throw Error(ErrorCode::Unsupported, "unbounded translation sets are not supported for epivector functions");
  if (k > 2) throw Error(ErrorCode::Unsupported, "polyhedral translation sets need dim X <= 2");
  std::vector<Vec> pts;
  for (const auto& m : M.points) pts.push_back(add(m, x));
  PolyData P = poly_from_vrep(k, pts, {});
  std::vector<Halfspace> rows = P.H;
  rows.insert(rows.end(), E.domain.rows.begin(), E.domain.rows.end());
  PolyData Pd = poly_from_hrep(k, rows);
  if (Pd.empty) return {empty_set(f.ws()), true};
  // lines where the active piece of some component may switch, plus the boundary lines
  std::vector<Halfspace> lines = Pd.H;
  for (const auto& c : E.components)
    for (std::size_t i = 0; i < c.pieces.size(); ++i)
      for (std::size_t j = i + 1; j < c.pieces.size(); ++j) {
        Vec a = sub(c.pieces[i].a, c.pieces[j].a);
        if (!is_zero(a)) lines.push_back({a, Q(c.pieces[j].c - c.pieces[i].c)});
      }
  std::vector<Vec> cand = Pd.V;
  auto inside = [&Pd](const Vec& y) {
    for (const auto& h : Pd.H)
      if (dot(h.n, y) > h.b) return false;
    return true;
  };
  if (k == 1) {
    for (const auto& l : lines) {
      Vec y{l.b / l.n[0]};
      if (inside(y)) cand.push_back(y);
    }
  } else {
    for (std::size_t i = 0; i < lines.size(); ++i)
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        Q det = cross(lines[i].n, lines[j].n);
        if (det == 0) continue;
        Vec y{(lines[i].b * lines[j].n[1] - lines[j].b * lines[i].n[1]) / det,
              (lines[i].n[0] * lines[j].b - lines[j].n[0] * lines[i].b) / det};
        if (inside(y)) cand.push_back(y);
      }
  }
  std::vector<Vec> imgs;
  for (const auto& y : cand) imgs.push_back(f.psi(y));
  return {hull(f.ws(), imgs, {}), true};
}

TranslationResult sample_oracle(const SetFunction& f, const Translation& M, const Vec& x) {
  if (!M.rays.empty()) throw Error(ErrorCode::Unsupported, "unbounded translation sets are not supported for oracle functions");
  std::vector<UpperSet> vals;
  const auto& P = M.points;
  for (std::size_t i = 0; i < P.size(); ++i)
    for (std::size_t j = i; j < P.size(); ++j)
      for (int s = 0; s <= 8; ++s) vals.push_back(f.eval(add(segment_point(P[i], P[j], Q(s, 8)), x)));
  return {inf_family(f.ws(), vals), false};
}

}  // namespace

TranslationResult inf_translation(const SetFunction& f, const Translation& M, const Vec& x) {
  if (M.points.empty()) throw Error(ErrorCode::EmptyTranslationSet, "translation set is empty");
  for (const auto& p : M.points) check_xdim(f.xdim(), p, "translation point");
  for (const auto& r : M.rays) check_xdim(f.xdim(), r, "translation ray");
  if (M.kind == Translation::Kind::Finite) {
    std::vector<UpperSet> vals;
    for (const auto& m : M.points) vals.push_back(f.eval(add(m, x)));
    return {inf_family(f.ws(), vals), f.exact()};
  }
  switch (f.variant()) {
    case SetFunction::Variant::ParamPoly: return project_param_poly(f, M, x);
    case SetFunction::Variant::EpiVector: return hull_epi_vector(f, M, x);
    default: return sample_oracle(f, M, x);
  }
}

SetFunction translated_function(const SetFunction& f, const Translation& M) {
  if (f.variant() != SetFunction::Variant::ParamPoly)
    throw Error(ErrorCode::Unsupported, "symbolic inf-translation needs a parampoly function");
  if (M.points.empty()) throw Error(ErrorCode::EmptyTranslationSet, "translation set is empty");
  const auto& P = *f.param_poly_data();
  const int d = f.ws().dim(), k = f.xdim();
  if (k > 2) throw Error(ErrorCode::Unsupported, "polyhedral translation sets need dim X <= 2");
  // columns: z (d), x (k), m (k); the m block is eliminated
  std::vector<LinIneq> sys;
  auto row = [&](const Vec& zpart, const Vec& xpart, const Vec& mpart, const Q& b) {
    Vec a = zpart;
    a.insert(a.end(), xpart.begin(), xpart.end());
    a.insert(a.end(), mpart.begin(), mpart.end());
    sys.push_back({a, b});
  };
  for (std::size_t i = 0; i < P.normals.size(); ++i)
    for (const auto& pc : P.offsets[i].pieces) row(P.normals[i], neg(pc.a), neg(pc.a), pc.c);
  for (const auto& r : P.domain.rows) row(zeros(d), r.n, r.n, r.b);
  if (M.kind == Translation::Kind::Polyhedron) {
    for (const auto& h : poly_from_vrep(k, M.points, M.rays).H) row(zeros(d), zeros(k), h.n, h.b);
  } else if (M.points.size() != 1) {
    throw Error(ErrorCode::Unsupported, "symbolic inf-translation needs a convex translation set");
  } else {
    for (int j = 0; j < k; ++j) {
      row(zeros(d), zeros(k), unit(k, j), M.points[0][j]);
      row(zeros(d), zeros(k), neg(unit(k, j)), -M.points[0][j]);
    }
  }
  ParamPolyData out;
  auto proj = fm_project(sys, static_cast<std::size_t>(d + k));
  bool empty = !proj;
  if (proj) {
    for (const auto& r : *proj) {
      Vec zp(r.a.begin(), r.a.begin() + d), xp(r.a.begin() + d, r.a.end());
      if (is_zero(zp)) {
        out.domain.rows.push_back({xp, r.b});
      } else if (!f.ws().cone().in_dual(zp)) {
        // valid for every x, so no value can be a nonempty upper set
        empty = true;
      } else {
        out.normals.push_back(zp);
        out.offsets.push_back(ConcavePWL{{Affine{neg(xp), r.b}}});
      }
    }
  }
  if (empty) {
    out = ParamPolyData{};
    out.domain.rows.push_back({zeros(k), Q(-1)});
  }
  return SetFunction::param_poly(f.ws_ptr(), k, std::move(out), f.name() + "^");
}

LscVerdict lattice_lsc_probe(const SetFunction& f, const Vec& x0, const Vec& x, const LscProbe& probe) {
  LscVerdict v;
  if (f.exact()) {
    v.note = "certified: closed polyhedral graph";
    return v;
  }
  v.approximate = true;
  const Workspace& ws = f.ws();
  UpperSet base = f.eval(x0);
  std::vector<Vec> extra;
  for (const auto& h : base.H) extra.push_back(h.n);
  std::vector<Vec> dirs = ws.merged_directions(extra);
  const Q tol = f.tolerance();
  const Q& r = probe.radii.back();
  std::vector<UpperSet> vals;
  for (int j = 0; j <= probe.samples; ++j) {
    Q t = r * j / probe.samples;
    if (t > 1) break;
    vals.push_back(f.eval(segment_point(x0, x, t)));
  }
  UpperSet H = inf_family(ws, vals);
  for (const auto& z : dirs) {
    ExtReal gap = residual(neg_support(z, base), neg_support(z, H));
    if (gap > ExtReal(tol)) v.failing_directions.push_back(z);
  }
  if (!v.failing_directions.empty()) {
    v.holds = false;
    v.witness_radius = r;
  }
  v.note = "sampled";
  return v;
}

LscVerdict cminus_lsc_probe(const SetFunction& f, const Vec& x0, const Vec& x, const std::vector<Vec>& mstar,
                            const LscProbe& probe) {
  LscVerdict v;
  if (mstar.empty()) throw Error(ErrorCode::InvalidArgument, "direction set is empty");
  if (f.exact()) {
    v.note = "certified: polyhedral scalarizations are closed";
    return v;
  }
  v.approximate = true;
  const Q tol = f.tolerance();
  const Q& r = probe.radii.back();
  for (const auto& z : mstar) {
    ExtReal phi0 = f.scalarize(z, x0);
    if (phi0.is_minus_inf()) continue;
    ExtReal low = ExtReal::plus_inf();
    for (int j = 1; j <= probe.samples; ++j) {
      Q t = r * j / probe.samples;
      if (t > 1) break;
      low = min(low, f.scalarize(z, segment_point(x0, x, t)));
    }
    bool ok = phi0.is_plus_inf() ? low.is_plus_inf() : low >= ExtReal(Q(phi0.value() - tol));
    if (!ok) v.failing_directions.push_back(z);
  }
  if (!v.failing_directions.empty()) {
    v.holds = false;
    v.witness_radius = r;
  }
  v.note = "sampled";
  return v;
}

}  // namespace setopt
