#include "setopt/vectoropt.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "setopt/error.hpp"

namespace setopt {

namespace {

Q right_slope(const ConvexPWL& c, const Vec& x, const Vec& u) {
  Q val = c.eval(x);
  bool first = true;
  Q best;
  for (const auto& p : c.pieces) {
    if (p.eval(x) != val) continue;
    Q s = dot(p.a, u);
    if (first || s > best) best = s;
    first = false;
  }
  return best;
}

Q l1_dist(const Vec& a, const Vec& b) { return l1_norm(sub(a, b)); }

Vec snap(const Vec& v, const Q& tol) {
  Vec out;
  for (const auto& c : v) out.push_back(simplest_between(c - tol, c + tol));
  return out;
}

bool dominated_by(const OrderCone& C, const Vec& z, const Vec& y) {
  Vec diff = sub(z, y);
  return C.contains(diff) && !C.in_lineality(diff);
}

struct Trail {
  std::vector<Q> ts;
  std::vector<Vec> qs;
};

Trail quotient_trail(const VectorFunction& psi, const Vec& x0, const Vec& u, const DiniGrid& g) {
  Trail tr;
  Vec base = psi.eval(x0);
  Q t = g.t0;
  for (int k = 0; k < g.steps; ++k, t *= g.rho) {
    Vec xt = add(x0, scale(t, u));
    if (!psi.in_domain(xt)) continue;
    tr.ts.push_back(t);
    tr.qs.push_back(scale(1 / t, sub(psi.eval(xt), base)));
  }
  return tr;
}

}  // namespace

VectorFunction VectorFunction::pwl(WorkspacePtr ws, int xdim, std::vector<ConvexPWL> components, XPolyhedron S,
                                   std::string name) {
  if (!ws) throw Error(ErrorCode::InvalidArgument, "missing workspace");
  if (static_cast<int>(components.size()) != ws->dim())
    throw Error(ErrorCode::DimensionMismatch, "one component per coordinate of Z is required");
  for (const auto& c : components) {
    if (c.pieces.empty()) throw Error(ErrorCode::InvalidArgument, "component without affine pieces");
    for (const auto& p : c.pieces)
      if (static_cast<int>(p.a.size()) != xdim) throw Error(ErrorCode::DimensionMismatch, "affine piece dimension");
  }
  for (const auto& h : S.rows)
    if (static_cast<int>(h.n.size()) != xdim) throw Error(ErrorCode::DimensionMismatch, "domain row dimension");
  VectorFunction v;
  v.exact_ = true;
  v.ws_ = std::move(ws);
  v.xdim_ = xdim;
  v.name_ = std::move(name);
  v.comps_ = std::move(components);
  v.S_ = std::move(S);
  return v;
}

VectorFunction VectorFunction::oracle(WorkspacePtr ws, int xdim, std::function<std::optional<Vec>(const Vec&)> eval,
                                      const Q& tolerance, std::string name) {
  if (!ws || !eval) throw Error(ErrorCode::InvalidArgument, "missing workspace or evaluator");
  if (tolerance <= 0) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  VectorFunction v;
  v.exact_ = false;
  v.ws_ = std::move(ws);
  v.xdim_ = xdim;
  v.name_ = std::move(name);
  v.tol_ = tolerance;
  v.oracle_ = std::move(eval);
  return v;
}

bool VectorFunction::in_domain(const Vec& x) const {
  if (static_cast<int>(x.size()) != xdim_) throw Error(ErrorCode::DimensionMismatch, "point dimension");
  if (exact_) return S_.contains(x);
  return oracle_(x).has_value();
}

Vec VectorFunction::eval(const Vec& x) const {
  if (static_cast<int>(x.size()) != xdim_) throw Error(ErrorCode::DimensionMismatch, "point dimension");
  if (exact_) {
    if (!S_.contains(x)) throw Error(ErrorCode::BaseOutsideDomain, "point outside S");
    Vec out;
    for (const auto& c : comps_) out.push_back(c.eval(x));
    return out;
  }
  std::optional<Vec> v = oracle_(x);
  if (!v) throw Error(ErrorCode::BaseOutsideDomain, "point outside S");
  if (static_cast<int>(v->size()) != ws_->dim()) throw Error(ErrorCode::OracleFailure, "oracle value dimension");
  return *v;
}

SetFunction VectorFunction::epigraphical() const {
  if (exact_) return SetFunction::epi_vector(ws_, xdim_, EpiVectorData{comps_, S_}, name_);
  auto ws = ws_;
  auto ev = oracle_;
  OracleData d;
  d.eval = [ws, ev](const Vec& x) {
    std::optional<Vec> v = ev(x);
    return v ? point_plus_cone(*ws, *v) : empty_set(*ws);
  };
  d.declared_convex = true;
  d.tolerance = tol_;
  return SetFunction::oracle(ws_, xdim_, std::move(d), name_);
}

ExtendedPoint ExtendedPoint::fin(Vec z) { return ExtendedPoint{false, std::move(z)}; }

ExtendedPoint ExtendedPoint::inf(const Vec& dir) {
  if (is_zero(dir)) return fin(dir);
  return ExtendedPoint{true, scale(1 / l1_norm(dir), dir)};
}

DiniLimitSet vector_dini(const VectorFunction& psi, const Vec& x0, const Vec& u, const DiniGrid& grid) {
  if (!psi.in_domain(x0)) throw Error(ErrorCode::BaseOutsideDomain, "base point outside S");
  if (static_cast<int>(u.size()) != psi.xdim()) throw Error(ErrorCode::DimensionMismatch, "direction dimension");
  DiniLimitSet d;
  const int m = psi.ws().dim();
  if (is_zero(u)) {
    d.finite_points.push_back(zeros(m));
    d.exact = psi.exact();
    return d;
  }
  if (psi.exact()) {
    if (psi.domain().exit_time(x0, u) == ExtReal(0)) {
      d.diagnostic = "segment leaves S at t = 0";
      return d;
    }
    Vec q;
    for (const auto& c : psi.components()) q.push_back(right_slope(c, x0, u));
    d.finite_points.push_back(q);
    return d;
  }

  d.exact = false;
  const Q tol = psi.tolerance();
  Trail tr = quotient_trail(psi, x0, u, grid);
  const int n = static_cast<int>(tr.qs.size());
  if (n < grid.window) {
    d.diagnostic = "undecided: too few quotient samples inside S";
    return d;
  }
  auto within = [&](auto&& key) {
    for (int i = n - grid.window; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (l1_dist(key(i), key(j)) > tol) return false;
    return true;
  };
  if (within([&](int i) { return tr.qs[i]; })) {
    d.finite_points.push_back(snap(tr.qs.back(), tol));
    d.diagnostic = "convergent";
    return d;
  }
  auto dir = [&](int i) {
    Q nrm = l1_norm(tr.qs[i]);
    return nrm == 0 ? tr.qs[i] : scale(1 / nrm, tr.qs[i]);
  };
  bool large = true;
  for (int i = n - grid.window; i < n; ++i) large = large && l1_norm(tr.qs[i]) * tol > 1;
  if (large && within(dir)) {
    Vec s = snap(dir(n - 1), tol);
    if (!is_zero(s)) {
      d.infinite_dirs.push_back(ExtendedPoint::inf(s).z);
      d.diagnostic = "divergent with stable direction";
      return d;
    }
  }
  d.diagnostic = "undecided: quotients neither settle nor diverge along a stable direction";
  return d;
}

UpperSet infdir_plus_cone(const Workspace& ws, const Vec& z) {
  if (static_cast<int>(z.size()) != ws.dim()) throw Error(ErrorCode::DimensionMismatch, "direction dimension");
  if (is_zero(z)) return cone_set(ws);
  if (!ws.cone().contains(neg(z))) return empty_set(ws);
  // inf over t > 0 of {t z} + C is the closed cone generated by C and z.
  return hull(ws, {zeros(ws.dim())}, {z});
}

DiniClassification classify_dini(const VectorFunction& psi, const Vec& x0, const Vec& x, const DiniLimitSet& d,
                                 const std::vector<Vec>& mstar) {
  const Workspace& ws = psi.ws();
  const OrderCone& C = ws.cone();
  for (const auto& z : d.finite_points)
    if (static_cast<int>(z.size()) != ws.dim()) throw Error(ErrorCode::InconsistentLimitData, "finite limit dimension");
  for (const auto& z : d.infinite_dirs) {
    if (static_cast<int>(z.size()) != ws.dim()) throw Error(ErrorCode::InconsistentLimitData, "infinite limit dimension");
    if (is_zero(z) || l1_norm(z) != 1) throw Error(ErrorCode::InconsistentLimitData, "infinite direction not canonical");
  }
  const Vec u = sub(x, x0);
  const SetFunction f = psi.epigraphical();
  DiniClassification r;

  UpperSet fp;
  if (psi.exact()) {
    fp = set_derivative(f, x0, u).value;
  } else {
    // Closed convex hull of the quotient trail; stabilized divergence directions are recession directions of it.
    Trail tr = quotient_trail(psi, x0, u, DiniGrid{});
    fp = hull(ws, tr.qs, d.infinite_dirs);
  }

  for (const auto& z : d.finite_points) {
    if (psi.exact() && !set_equal(point_plus_cone(ws, z), fp)) {
      r.a = false;
      r.notes.push_back("(a) z + C differs from f'(x0, x - x0) at z = " + to_string(z));
    }
    for (const auto& zs : mstar) {
      ScalarDini s = scalar_dini(f, zs, x0, u);
      Q want = -dot(zs, z);
      bool ok = s.value.finite() && (psi.exact() ? s.value.value() == want : abs_q(s.value.value() - want) <= psi.tolerance());
      if (!ok) {
        r.a = false;
        r.notes.push_back("(a) scalar Dini differs from -z*(z) at z* = " + to_string(zs));
      }
    }
  }
  for (const auto& z : d.infinite_dirs) {
    if (!C.contains(neg(z))) {
      r.b = false;
      r.notes.push_back("(b) infinite direction outside -C: " + to_string(z));
    } else if (!leq(recession(ws, fp), infdir_plus_cone(ws, z))) {
      r.b = false;
      r.notes.push_back("(b) z_inf + C not inside the recession cone of f'");
    }
  }
  if (!d.finite_points.empty()) {
    for (const auto& z : d.infinite_dirs) {
      if (!C.in_lineality(z)) {
        r.c = false;
        r.notes.push_back("(c) finite and infinite limits coexist with direction outside C n -C");
      }
    }
  }
  return r;
}

EfficiencyReport efficient_set(const VectorFunction& psi, const std::vector<Vec>& grid) {
  if (grid.empty()) throw Error(ErrorCode::EmptyGrid, "grid is empty");
  const Workspace& ws = psi.ws();
  const OrderCone& C = ws.cone();
  for (const auto& p : grid)
    if (!psi.in_domain(p)) throw Error(ErrorCode::BaseOutsideDomain, "grid point outside S");
  const SetFunction f = psi.epigraphical();
  EfficiencyReport r;
  r.points = grid;
  std::vector<Vec> vals;
  for (const auto& p : grid) vals.push_back(psi.eval(p));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    bool eff = true;
    for (std::size_t j = 0; j < grid.size() && eff; ++j) eff = !dominated_by(C, vals[i], vals[j]);
    r.efficient.push_back(eff);
    bool min = minimal_check(f, grid[i], grid, ws.directions()).a;
    r.minimal.push_back(min);
    r.bridge = r.bridge && eff == min;
  }

  std::vector<UpperSet> min_vals, eff_sets, all_vals;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    all_vals.push_back(f.eval(grid[i]));
    if (r.minimal[i]) min_vals.push_back(all_vals.back());
    if (r.efficient[i]) eff_sets.push_back(point_plus_cone(ws, vals[i]));
  }
  auto covered = [](const std::vector<UpperSet>& a, const std::vector<UpperSet>& b) {
    for (const auto& s : a)
      if (std::none_of(b.begin(), b.end(), [&](const UpperSet& t) { return set_equal(s, t); })) return false;
    return true;
  };
  r.identity = covered(min_vals, eff_sets) && covered(eff_sets, min_vals);
  r.solution_exists = set_equal(inf_family(ws, eff_sets), inf_family(ws, all_vals));
  return r;
}

MintyReport vector_minty_check(const VectorFunction& psi, const Vec& x0, const std::vector<Vec>& grid,
                               const std::vector<Vec>& mstar, const std::vector<Q>& tset) {
  if (!psi.in_domain(x0)) throw Error(ErrorCode::BaseOutsideDomain, "base point outside S");
  for (const auto& x : grid)
    if (!psi.in_domain(x)) throw Error(ErrorCode::BaseOutsideDomain, "grid point outside S");
  for (const auto& t : tset)
    if (t <= 0 || t >= 1) throw Error(ErrorCode::InvalidArgument, "segment parameters must lie in (0, 1)");
  const Workspace& ws = psi.ws();
  const OrderCone& C = ws.cone();
  const SetFunction f = psi.epigraphical();
  MintyReport r;
  r.exact = psi.exact();

  // Points x_t = x + t (x0 - x), remembering the first (x, t) that produced each.
  std::map<Vec, std::pair<Vec, Q>, decltype(&lex_less)> origin(&lex_less);
  std::vector<Vec> order;
  auto push = [&](const Vec& p, const Vec& x, const Q& t) {
    if (origin.emplace(p, std::make_pair(x, t)).second) order.push_back(p);
  };
  push(x0, x0, Q(0));
  for (const auto& x : grid) {
    push(x, x, Q(0));
    if (x == x0) continue;
    const Vec u = sub(x0, x);
    std::vector<Q> marks{Q(0)};
    if (f.exact())
      for (const auto& t : f.event_times(x, u, ExtReal(1))) marks.push_back(t);
    marks.push_back(Q(1));
    std::vector<Q> ts = tset;
    for (std::size_t i = 1; i < marks.size(); ++i) {
      ts.push_back(marks[i]);
      ts.push_back((marks[i - 1] + marks[i]) / 2);
    }
    std::sort(ts.begin(), ts.end());
    for (const auto& t : ts)
      if (t < 1) push(add(x, scale(t, u)), x, t);
  }
  r.points = order;

  const Vec v0 = psi.eval(x0);
  for (const auto& p : order) r.efficient = r.efficient && !dominated_by(C, v0, psi.eval(p));

  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vec& p = order[i];
    if (psi.eval(p) == v0) continue;
    const auto& [x, t] = origin.at(p);
    const Vec u = sub(x0, p);
    DiniLimitSet d = vector_dini(psi, p, u);
    r.exact = r.exact && d.exact;
    r.single_valued = r.single_valued && d.finite_points.size() == 1 && d.infinite_dirs.empty();

    bool inner = true, scalar = false;
    std::optional<Vec> blocking;
    for (const auto& q : d.finite_points) {
      inner = inner && !C.contains(q);
      for (const auto& zs : mstar) {
        if (-dot(zs, q) < 0) scalar = true;
        else if (!blocking) blocking = zs;
      }
      for (const auto& zs : mstar) {
        ScalarDini s = scalar_dini(f, zs, p, u);
        bool fin = s.value.finite() &&
                   (s.exact ? s.value.value() == -dot(zs, q) : abs_q(s.value.value() + dot(zs, q)) <= psi.tolerance());
        r.scalar_finite = r.scalar_finite && fin;
      }
    }
    for (const auto& z : d.infinite_dirs) {
      inner = inner && !C.contains(z);
      for (const auto& zs : mstar)
        if (-dot(zs, z) < 0) scalar = true;
    }
    if (d.finite_points.empty() && d.infinite_dirs.empty()) {
      r.exact = false;
      continue;
    }
    r.inner_form = r.inner_form && inner;
    r.scalar_form = r.scalar_form && scalar;
    if (!inner || !scalar) {
      std::string note = "psi'(x_t, x0 - x) = ";
      note += d.finite_points.empty() ? "inf " + to_string(d.infinite_dirs.front()) : to_string(d.finite_points.front());
      note += " from x = " + to_string(x);
      r.witnesses.push_back(Witness{i, p, blocking, t, note});
    }
  }
  r.set_form = check(f, Ineq::MVI_M, x0, order, mstar).holds;
  r.finite_form = check(f, Ineq::mvi_M_finite, x0, order, C.facet_normals()).holds;
  return r;
}

TrailLimits trail_limits(const Workspace& ws, const PolyTrail& trail) {
  const int m = ws.dim();
  if (static_cast<int>(trail.comps.size()) != m) throw Error(ErrorCode::DimensionMismatch, "trail dimension");
  int K = 0;
  for (const auto& c : trail.comps)
    for (int k = 0; k < static_cast<int>(c.size()); ++k)
      if (c[k] != 0) K = std::max(K, k);
  auto coeff = [&](int k) {
    Vec v;
    for (const auto& c : trail.comps) v.push_back(k < static_cast<int>(c.size()) ? c[k] : Q(0));
    return v;
  };
  auto lead_sign = [&](const Vec& g) {
    for (int k = K; k >= 1; --k) {
      int s = sgn(dot(g, coeff(k)));
      if (s != 0) return s;
    }
    return 0;
  };

  TrailLimits r;
  r.limsup = K == 0 ? ExtendedPoint::fin(coeff(0)) : ExtendedPoint::inf(coeff(K));
  r.limsup_plus_cone = r.limsup.infinite ? infdir_plus_cone(ws, r.limsup.z) : point_plus_cone(ws, r.limsup.z);

  // liminf: bound on -z*(z) is liminf of -z*(z_t) over z* in C^-, reduced degree by degree along faces of C^-.
  std::vector<Vec> G = ws.cone().facet_normals();
  bool empty = false;
  for (int k = K; k >= 1 && !empty; --k) {
    std::vector<Vec> next;
    for (const auto& g : G) {
      int s = sgn(-dot(g, coeff(k)));
      if (s > 0) empty = true;
      if (s == 0) next.push_back(g);
    }
    G = next;
  }
  if (empty) {
    r.lattice_liminf = empty_set(ws);
  } else {
    std::vector<Halfspace> H;
    for (const auto& g : G) H.push_back(Halfspace{g, dot(g, coeff(0))});
    r.lattice_liminf = canonicalize(ws, H);
  }

  // limsup: the tail intersections are {g.z <= inf_{t >= T} g.z_t} over facet normals g.
  std::vector<Halfspace> H;
  empty = false;
  for (const auto& g : ws.cone().facet_normals()) {
    int s = lead_sign(g);
    if (s < 0) empty = true;
    if (s == 0) H.push_back(Halfspace{g, dot(g, coeff(0))});
  }
  r.lattice_limsup = empty ? empty_set(ws) : canonicalize(ws, H);
  r.lattice_converges = set_equal(r.lattice_liminf, r.lattice_limsup);
  r.commutes = r.lattice_converges && set_equal(r.limsup_plus_cone, r.lattice_liminf);
  return r;
}

}  // namespace setopt
