#include "kit/corpus.hpp"

#include <set>

#include "setopt/fm.hpp"

using namespace setopt;

namespace kit {

namespace {

Vec random_int_vec(Rng& r, long range) {
  Vec v;
  do {
    v = Vec{Q(r.uniform(-range, range)), Q(r.uniform(-range, range))};
  } while (is_zero(v));
  return v;
}

std::string show(const UpperSet& s) {
  if (s.empty) return "Empty";
  std::string out = "{";
  for (const auto& h : s.H) out += to_string(h.n) + "<=" + to_string(h.b) + " ";
  return out + "}";
}

bool raw_ok(const std::vector<Halfspace>& raw, const Vec& z) {
  for (const auto& h : raw)
    if (dot(h.n, z) > h.b) return false;
  return true;
}

std::vector<Vec> directions_with(const Workspace& ws, const UpperSet& a) {
  std::vector<Vec> extra;
  for (const auto& h : a.H) extra.push_back(h.n);
  return ws.merged_directions(extra);
}

}  // namespace

Vec random_point(Rng& r, int d, long range) {
  Vec p;
  for (int i = 0; i < d; ++i) p.push_back(r.rat(-range, range));
  return p;
}

WorkspacePtr random_workspace(Rng& r, int kind) {
  std::vector<Vec> gens;
  if (kind == 0) {
    Vec a, b;
    do {
      a = random_int_vec(r, 3);
      b = random_int_vec(r, 3);
    } while (cross(a, b) <= 0);
    gens = {a, b};
  } else if (kind == 1) {
    gens = {random_int_vec(r, 3)};
  }
  std::vector<Vec> extra;
  auto cone = OrderCone::make(2, gens);
  // a couple of interior directions of C^- beyond the facet normals
  const auto& ns = cone.facet_normals();
  for (int i = 0; i < 2; ++i) {
    Vec z = zeros(2);
    for (const auto& n : ns) z = add(z, scale(Q(r.uniform(0, 2)), n));
    if (!is_zero(z)) extra.push_back(z);
  }
  return Workspace::make(cone, extra);
}

UpperSet random_set(Rng& r, const Workspace& ws) {
  long mode = r.uniform(0, 19);
  if (mode == 0) return empty_set(ws);
  if (mode == 1) return all_set(ws);
  const auto& ns = ws.cone().facet_normals();
  if (mode < 12) {
    long k = r.uniform(1, 6);
    Vec c = random_point(r, 2);
    bool centered = r.coin(0.85);
    std::vector<Halfspace> raw;
    for (long i = 0; i < k; ++i) {
      Vec n = zeros(2);
      while (is_zero(n)) {
        n = zeros(2);
        for (const auto& f : ns) n = add(n, scale(Q(r.uniform(0, 3)), f));
      }
      Q b = centered ? dot(n, c) + r.rat(0, 3) : r.rat(-4, 4);
      raw.push_back({n, b});
    }
    return canonicalize(ws, raw);
  }
  long np = r.uniform(1, 3);
  std::vector<Vec> pts, rays;
  for (long i = 0; i < np; ++i) pts.push_back(random_point(r, 2));
  if (r.coin(0.2)) rays.push_back(random_int_vec(r, 2));
  return hull(ws, pts, rays);
}

void check_canonical_form(Rng& r, const Workspace& ws, const std::vector<Halfspace>& raw, SuiteResult& out) {
  UpperSet s = canonicalize(ws, raw);
  std::vector<LinIneq> sys;
  for (const auto& h : raw) sys.push_back({h.n, h.b});
  bool feasible = fm_feasible(sys);
  out.expect(feasible == !s.empty, "emptiness disagrees with elimination");
  if (s.empty) return;

  for (const auto& v : s.V) out.expect(raw_ok(raw, v), "vertex violates raw system");
  for (const auto& ray : s.R)
    for (const auto& h : raw) out.expect(dot(h.n, ray) <= 0, "ray violates raw system");
  for (const auto& h : s.H) {
    ExtReal sig = support(h.n, s);
    out.expect(sig == ExtReal(h.b), "canonical constraint not supporting");
  }
  // independent vertex enumeration for pointed full-dimensional sets
  std::vector<Vec> raw_normals;
  for (const auto& h : raw) raw_normals.push_back(h.n);
  if (s.aff_dim == 2 && rank_of(2, raw_normals) == 2) {
    std::set<Vec, decltype(&lex_less)> brute(&lex_less);
    for (std::size_t i = 0; i < raw.size(); ++i)
      for (std::size_t j = i + 1; j < raw.size(); ++j) {
        Q det = cross(raw[i].n, raw[j].n);
        if (det == 0) continue;
        Vec z{(raw[i].b * raw[j].n[1] - raw[j].b * raw[i].n[1]) / det,
              (raw[i].n[0] * raw[j].b - raw[j].n[0] * raw[i].b) / det};
        if (!raw_ok(raw, z)) continue;
        // extreme iff two independent tight constraints, which holds by construction
        brute.insert(z);
      }
    std::set<Vec, decltype(&lex_less)> mine(s.V.begin(), s.V.end(), &lex_less);
    std::string msg = "vertex set differs from pairwise enumeration: brute";
    for (const auto& v : brute) msg += " " + to_string(v);
    msg += " mine";
    for (const auto& v : mine) msg += " " + to_string(v);
    msg += " raw";
    for (const auto& h : raw) msg += " " + to_string(h.n) + "<=" + to_string(h.b);
    out.expect(brute == mine, msg);
  }
  // both routes to the canonical form agree
  UpperSet via_v = hull(ws, s.V, s.R);
  out.expect(set_equal(via_v, s), "V-route hull differs from H-route");
  out.expect(via_v.H == s.H, "canonical constraint lists differ between routes");
  // sampled membership
  for (int k = 0; k < 12; ++k) {
    Vec z = k < static_cast<int>(s.V.size()) ? add(s.V[k], random_point(r, 2, 1)) : random_point(r, 2, 5);
    out.expect(raw_ok(raw, z) == contains_point(s, z), "membership differs at " + to_string(z));
  }
}

SuiteResult canonical_form_suite(long n, std::uint64_t seed) {
  SuiteResult res{"canonical form"};
  Rng r(seed);
  for (long i = 0; i < n; ++i) {
    auto ws = random_workspace(r, static_cast<int>(i % 3));
    const auto& ns = ws->cone().facet_normals();
    std::vector<Halfspace> raw;
    long k = r.uniform(0, 6);
    Vec c = random_point(r, 2);
    for (long j = 0; j < k; ++j) {
      Vec nv = zeros(2);
      while (is_zero(nv)) {
        nv = zeros(2);
        for (const auto& f : ns) nv = add(nv, scale(Q(r.uniform(0, 3)), f));
      }
      raw.push_back({nv, r.coin(0.7) ? dot(nv, c) + r.rat(0, 2) : r.rat(-3, 3)});
    }
    ++res.instances;
    check_canonical_form(r, *ws, raw, res);
  }
  return res;
}

SuiteResult lattice_suite(long n, std::uint64_t seed) {
  SuiteResult res{"lattice laws"};
  Rng r(seed);
  for (long i = 0; i < n; ++i) {
    auto wsp = random_workspace(r, static_cast<int>(i % 3));
    const Workspace& ws = *wsp;
    UpperSet A = random_set(r, ws), B = random_set(r, ws), D = random_set(r, ws), M = random_set(r, ws);
    if (r.coin(0.3)) A = add(ws, B, M);  // makes A ÷ B nonempty more often
    ++res.instances;
    const std::string tag = " [#" + std::to_string(i) + " A=" + show(A) + " B=" + show(B) + "]";

    UpperSet I = inf_family(ws, {A, B});
    res.expect(leq(I, A) && leq(I, B), "inf is not a lower bound" + tag);
    res.expect((leq(D, A) && leq(D, B)) == leq(D, I), "inf is not greatest" + tag);
    UpperSet S = sup_family(ws, {A, B});
    res.expect(leq(A, S) && leq(B, S), "sup is not an upper bound" + tag);
    res.expect((leq(A, D) && leq(B, D)) == leq(S, D), "sup is not least" + tag);
    res.expect(set_equal(inf_family(ws, {A, A}), A) && set_equal(sup_family(ws, {A, A}), A), "idempotence" + tag);
    res.expect(set_equal(I, inf_family(ws, {B, A})) && set_equal(S, sup_family(ws, {B, A})), "commutativity" + tag);
    res.expect(set_equal(inf_family(ws, {I, D}), inf_family(ws, {A, inf_family(ws, {B, D})})), "inf associativity" + tag);
    res.expect(set_equal(sup_family(ws, {S, D}), sup_family(ws, {A, sup_family(ws, {B, D})})), "sup associativity" + tag);

    UpperSet lhs = add(ws, B, inf_family(ws, {A, D, M}));
    UpperSet rhs = inf_family(ws, {add(ws, B, A), add(ws, B, D), add(ws, B, M)});
    res.expect(set_equal(lhs, rhs), "distributivity" + tag);

    UpperSet AB = residual_diff(ws, A, B);
    res.expect(leq(A, add(ws, B, AB)), "A ≼ B ⊕ (A÷B)" + tag);
    res.expect(leq(A, add(ws, B, M)) == leq(AB, M), "residuation adjunction" + tag);

    Q s = r.pick(std::vector<Q>{Q(1, 2), Q(2), Q(3, 2), Q(5)});
    res.expect(set_equal(scale(ws, s, AB), residual_diff(ws, scale(ws, s, A), scale(ws, s, B))), "calc rule (a)" + tag);
    Q t = r.pick(std::vector<Q>{Q(1, 2), Q(1, 3), Q(3, 4)});
    UpperSet l2 = residual_diff(ws, add(ws, scale(ws, t, A), scale(ws, 1 - t, B)), D);
    UpperSet r2 = add(ws, scale(ws, t, residual_diff(ws, A, D)), scale(ws, 1 - t, residual_diff(ws, B, D)));
    res.expect(leq(l2, r2), "calc rule (b)" + tag);
    res.expect(leq(residual_diff(ws, A, D), add(ws, AB, residual_diff(ws, B, D))), "calc rule (c)" + tag);
    if (!A.empty) res.expect(set_equal(recession(ws, A), residual_diff(ws, A, A)), "calc rule (d)" + tag);
  }
  return res;
}

SuiteResult scalarization_suite(long n, std::uint64_t seed) {
  SuiteResult res{"scalarization"};
  Rng r(seed);
  for (long i = 0; i < n; ++i) {
    auto wsp = random_workspace(r, static_cast<int>(i % 3));
    const Workspace& ws = *wsp;
    std::vector<UpperSet> fam;
    long k = r.uniform(1, 4);
    for (long j = 0; j < k; ++j) fam.push_back(random_set(r, ws));
    UpperSet A = random_set(r, ws), B = random_set(r, ws);
    if (r.coin(0.3)) A = add(ws, B, random_set(r, ws));
    ++res.instances;
    UpperSet I = inf_family(ws, fam);
    UpperSet AB = residual_diff(ws, A, B);
    for (const auto& z : ws.directions()) {
      ExtReal m = ExtReal::plus_inf();
      for (const auto& s : fam) m = min(m, neg_support(z, s));
      res.expect(neg_support(z, I) == m, "scalarization of inf");
      ExtReal lhs = residual(neg_support(z, A), neg_support(z, B));
      res.expect(lhs <= neg_support(z, AB), "scalarization of residual");
    }
    // representation over a direction set containing the facet normals
    std::vector<Vec> dirs = directions_with(ws, A);
    std::vector<UpperSet> levels;
    for (const auto& z : dirs) levels.push_back(level_halfspace(ws, z, neg_support(z, A)));
    res.expect(set_equal(sup_family(ws, levels), A), "representation by scalarizations");
    if (!A.empty) {
      UpperSet rc = recession(ws, A);
      for (const auto& z : dirs)
        if (neg_support(z, A).finite())
          for (const auto& ray : rc.R) res.expect(dot(z, ray) <= 0, "finite direction outside (0+A)^-");
    }
  }
  return res;
}

SuiteResult recession_suite(long n, std::uint64_t seed) {
  SuiteResult res{"recession cones"};
  Rng r(seed);
  for (long i = 0; i < n; ++i) {
    auto wsp = random_workspace(r, static_cast<int>(i % 3));
    const Workspace& ws = *wsp;
    UpperSet A = random_set(r, ws), B = random_set(r, ws);
    if (r.coin(0.4)) A = add(ws, B, random_set(r, ws));
    ++res.instances;
    if (!A.empty) {
      UpperSet rc = recession(ws, A);
      auto build = [&](const std::vector<Vec>& dirs) {
        std::vector<UpperSet> hs;
        for (const auto& z : dirs)
          if (neg_support(z, A).finite()) hs.push_back(level_halfspace(ws, z, ExtReal(0)));
        return sup_family(ws, hs);
      };
      res.expect(set_equal(rc, build(directions_with(ws, A))), "finite-scalarization formula for 0+A");
      res.expect(leq(build(ws.directions()), rc), "0+A inside the sampled intersection");
    }
    if (!A.empty && !B.empty) {
      UpperSet rs = recession(ws, add(ws, A, B));
      UpperSet ra = recession(ws, A), rb = recession(ws, B);
      UpperSet hullu = inf_family(ws, {ra, rb});
      res.expect(leq(rs, hullu), "0+(A⊕B) ≼ cl co(0+A ∪ 0+B)");
      res.expect(set_equal(hullu, add(ws, ra, rb)), "cl co(0+A ∪ 0+B) = 0+A ⊕ 0+B");
      res.expect(set_equal(rs, hullu), "0+(A⊕B) = 0+A ⊕ 0+B");
      UpperSet Bs = sup_family(ws, {A, random_set(r, ws)});  // A ≼ Bs
      if (!Bs.empty) res.expect(leq(ra, recession(ws, Bs)), "monotonicity of 0+");
    }
    UpperSet AB = residual_diff(ws, A, B);
    if (!AB.empty) {
      res.expect(leq(recession(ws, AB), recession(ws, A)), "0+(A÷B) ≼ 0+A");
      res.expect(leq(recession(ws, A), recession(ws, B)), "0+A ≼ 0+B");
      if (!B.empty) res.expect(set_equal(recession(ws, AB), recession(ws, A)), "0+(A÷B) = 0+A");
    }
  }
  return res;
}

}  // namespace kit
