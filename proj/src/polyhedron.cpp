#include "setopt/polyhedron.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "setopt/error.hpp"
#include "setopt/extreal.hpp"

namespace setopt {

namespace {

using VecSet = std::set<Vec, decltype(&lex_less)>;

VecSet make_vecset() { return VecSet(&lex_less); }

void sort_by_angle(std::vector<Vec>& rs) { std::sort(rs.begin(), rs.end(), angle_less); }

void sort_halfspaces(int d, std::vector<Halfspace>& hs) {
  std::sort(hs.begin(), hs.end(), [d](const Halfspace& a, const Halfspace& b) {
    return d == 2 ? angle_less(a.n, b.n) : a.n[0] > b.n[0];
  });
}

PolyData make_empty() {
  PolyData p;
  p.empty = true;
  p.dim = -1;
  return p;
}

// Canonical constraints for a pointed polyhedron of dimension 0 or 1 in R^2.
std::vector<Halfspace> lowdim_constraints(const std::vector<Vec>& V, const std::vector<Vec>& R, int dim) {
  std::vector<Halfspace> H;
  const Vec& p = V.front();
  if (dim == 0) {
    for (std::size_t i = 0; i < 2; ++i) {
      Vec e = unit(2, i);
      H.push_back({e, p[i]});
      H.push_back({neg(e), Q(-p[i])});
    }
    return H;
  }
  Vec w;
  if (!R.empty()) {
    w = R.front();
  } else {
    for (const auto& v : V)
      if (v != p) {
        w = primitive(sub(v, p));
        break;
      }
  }
  Vec m = primitive(perp(w));
  Q c = dot(m, p);
  H.push_back({m, c});
  H.push_back({neg(m), Q(-c)});
  Q lo = dot(w, p), hi = lo;
  for (const auto& v : V) {
    Q s = dot(w, v);
    if (s < lo) lo = s;
    if (s > hi) hi = s;
  }
  H.push_back({neg(w), Q(-lo)});
  if (R.empty()) H.push_back({w, hi});
  return H;
}

PolyData from_hrep_1d(const std::vector<Halfspace>& hs) {
  ExtReal lo = ExtReal::minus_inf(), hi = ExtReal::plus_inf();
  for (const auto& h : hs) {
    if (h.n[0] > 0) hi = min(hi, ExtReal(h.b));
    else lo = max(lo, ExtReal(Q(-h.b)));
  }
  if (lo > hi) return make_empty();
  PolyData p;
  p.empty = false;
  p.H = hs;
  sort_halfspaces(1, p.H);
  if (lo.finite()) p.V.push_back(Vec{lo.value()});
  if (hi.finite() && hi != lo) p.V.push_back(Vec{hi.value()});
  if (p.V.empty()) p.V.push_back(Vec{Q(0)});
  if (hi.is_plus_inf()) p.R.push_back(Vec{Q(1)});
  if (lo.is_minus_inf()) p.R.push_back(Vec{Q(-1)});
  p.dim = (lo == hi) ? 0 : 1;
  return p;
}

PolyData from_hrep_parallel(const std::vector<Halfspace>& hs) {
  const Vec m = hs.front().n;
  ExtReal lo = ExtReal::minus_inf(), hi = ExtReal::plus_inf();
  for (const auto& h : hs) {
    if (h.n == m) hi = min(hi, ExtReal(h.b));
    else lo = max(lo, ExtReal(Q(-h.b)));
  }
  if (lo > hi) return make_empty();
  PolyData p;
  p.empty = false;
  p.H = hs;
  sort_halfspaces(2, p.H);
  Q n2 = dot(m, m);
  if (hi.finite()) p.V.push_back(scale(hi.value() / n2, m));
  if (lo.finite() && lo != hi) p.V.push_back(scale(lo.value() / n2, m));
  std::sort(p.V.begin(), p.V.end(), lex_less);
  Vec l = perp(m);
  std::vector<Vec> R{l, neg(l)};
  if (hi.is_plus_inf()) R.push_back(m);
  if (lo.is_minus_inf()) R.push_back(neg(m));
  p.R = cone_reduce(2, R);
  p.dim = (lo == hi) ? 1 : 2;
  return p;
}

PolyData from_hrep_pointed(const std::vector<Halfspace>& hs) {
  const std::size_t m = hs.size();
  VecSet verts = make_vecset();
  std::vector<bool> facet(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    const Vec& n = hs[i].n;
    Vec p = scale(hs[i].b / dot(n, n), n);
    Vec dir = perp(n);
    ExtReal lo = ExtReal::minus_inf(), hi = ExtReal::plus_inf();
    bool ok = true;
    for (std::size_t j = 0; j < m && ok; ++j) {
      if (j == i) continue;
      Q a = dot(hs[j].n, dir);
      Q c = hs[j].b - dot(hs[j].n, p);
      if (a == 0) {
        if (c < 0) ok = false;
      } else if (a > 0) {
        hi = min(hi, ExtReal(Q(c / a)));
      } else {
        lo = max(lo, ExtReal(Q(c / a)));
      }
      if (lo > hi) ok = false;
    }
    if (!ok) continue;
    if (lo.finite()) verts.insert(add(p, scale(lo.value(), dir)));
    if (hi.finite()) verts.insert(add(p, scale(hi.value(), dir)));
    facet[i] = lo < hi;
  }
  if (verts.empty()) return make_empty();

  std::vector<Vec> cand;
  for (const auto& h : hs) {
    Vec dir = perp(h.n);
    for (const Vec& r : {dir, neg(dir)}) {
      bool ok = true;
      for (const auto& g : hs)
        if (dot(g.n, r) > 0) {
          ok = false;
          break;
        }
      if (ok) cand.push_back(r);
    }
  }
  PolyData p;
  p.empty = false;
  p.R = cone_reduce(2, cand);
  p.V.assign(verts.begin(), verts.end());
  std::vector<Vec> span;
  for (const auto& v : p.V) span.push_back(sub(v, p.V.front()));
  span.insert(span.end(), p.R.begin(), p.R.end());
  p.dim = rank_of(2, span);
  if (p.dim == 2) {
    for (std::size_t i = 0; i < m; ++i)
      if (facet[i]) p.H.push_back(hs[i]);
  } else {
    p.H = lowdim_constraints(p.V, p.R, p.dim);
    if (p.dim == 0) p.V.resize(1);
    else {
      // keep only the endpoints of the segment or the apex of the ray
      const Vec w = p.R.empty() ? primitive(sub(p.V.back(), p.V.front())) : p.R.front();
      auto by_w = [&w](const Vec& a, const Vec& b) { return dot(w, a) < dot(w, b); };
      auto [mn, mx] = std::minmax_element(p.V.begin(), p.V.end(), by_w);
      std::vector<Vec> ends{*mn};
      if (p.R.empty()) ends.push_back(*mx);
      std::sort(ends.begin(), ends.end(), lex_less);
      p.V = ends;
    }
  }
  sort_halfspaces(2, p.H);
  return p;
}

std::vector<Vec> hull_2d(std::vector<Vec> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Vec> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(sub(h[k - 1], h[k - 2]), sub(pts[i], h[k - 2])) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(sub(h[k - 1], h[k - 2]), sub(pts[i - 1], h[k - 2])) <= 0) --k;
    h[k++] = pts[i - 1];
  }
  h.resize(k - 1);
  return h;
}

}  // namespace

int rank_of(int d, const std::vector<Vec>& vs) {
  const Vec* first = nullptr;
  for (const auto& v : vs)
    if (!is_zero(v)) {
      first = &v;
      break;
    }
  if (!first) return 0;
  if (d == 1) return 1;
  for (const auto& v : vs)
    if (cross(*first, v) != 0) return 2;
  return 1;
}

std::vector<Vec> cone_reduce(int d, const std::vector<Vec>& R) {
  if (d == 1) {
    bool pos = false, negv = false;
    for (const auto& r : R) {
      if (r[0] > 0) pos = true;
      if (r[0] < 0) negv = true;
    }
    std::vector<Vec> out;
    if (pos) out.push_back(Vec{Q(1)});
    if (negv) out.push_back(Vec{Q(-1)});
    return out;
  }
  VecSet uniq = make_vecset();
  for (const auto& r : R)
    if (!is_zero(r)) uniq.insert(primitive(r));
  std::vector<Vec> rs(uniq.begin(), uniq.end());
  sort_by_angle(rs);
  const std::size_t k = rs.size();
  if (k <= 1) return rs;
  // classify cyclic gaps between angularly consecutive rays
  std::size_t straight = k;
  for (std::size_t i = 0; i < k; ++i) {
    const Vec& a = rs[i];
    const Vec& b = rs[(i + 1) % k];
    Q c = cross(a, b);
    if (c < 0 || (k == 1)) {
      std::vector<Vec> out{b, a};
      if (b == a) out.resize(1);
      sort_by_angle(out);
      return out;
    }
    if (c == 0 && straight == k) straight = i;
  }
  if (straight == k) return {Vec{1, 0}, Vec{0, 1}, Vec{-1, 0}, Vec{0, -1}};
  const Vec& a = rs[straight];
  if (k == 2) {
    std::vector<Vec> out{a, neg(a)};
    sort_by_angle(out);
    return out;
  }
  // empty half-turn from a to -a: the remaining rays sit on the side of rot90(-a)
  std::vector<Vec> out{a, neg(a), primitive(Vec{a[1], Q(-a[0])})};
  sort_by_angle(out);
  return out;
}

PolyData poly_from_hrep(int d, const std::vector<Halfspace>& H) {
  if (d != 1 && d != 2) throw Error(ErrorCode::DimensionUnsupported, "exact kernel supports d in {1,2}");
  std::map<Vec, Q, decltype(&lex_less)> best(&lex_less);
  for (const auto& h : H) {
    if (static_cast<int>(h.n.size()) != d) throw Error(ErrorCode::DimensionMismatch, "halfspace dimension");
    if (is_zero(h.n)) {
      if (h.b < 0) return make_empty();
      continue;
    }
    Q f = primitive_factor(h.n);
    Vec n = scale(f, h.n);
    Q b = f * h.b;
    auto [it, inserted] = best.emplace(n, b);
    if (!inserted && b < it->second) it->second = b;
  }
  std::vector<Halfspace> hs;
  for (auto& [n, b] : best) hs.push_back({n, b});
  if (d == 1) return from_hrep_1d(hs);
  if (hs.empty()) {
    PolyData p;
    p.empty = false;
    p.dim = 2;
    p.V = {Vec{0, 0}};
    p.R = cone_reduce(2, {Vec{1, 0}, Vec{0, 1}, Vec{-1, 0}, Vec{0, -1}});
    return p;
  }
  std::vector<Vec> normals;
  for (const auto& h : hs) normals.push_back(h.n);
  if (rank_of(2, normals) == 1) return from_hrep_parallel(hs);
  return from_hrep_pointed(hs);
}

PolyData poly_from_vrep(int d, const std::vector<Vec>& V, const std::vector<Vec>& R) {
  if (V.empty()) throw Error(ErrorCode::InvalidArgument, "vertex representation needs a point");
  std::vector<Vec> cand;
  if (d == 1) {
    cand = {Vec{Q(1)}, Vec{Q(-1)}};
  } else {
    auto push_pm = [&cand](const Vec& v) {
      if (is_zero(v)) return;
      Vec p = primitive(v);
      cand.push_back(p);
      cand.push_back(neg(p));
    };
    push_pm(Vec{1, 0});
    push_pm(Vec{0, 1});
    std::vector<Vec> h = hull_2d(V);
    for (std::size_t i = 0; h.size() > 1 && i < h.size(); ++i) {
      Vec e = sub(h[(i + 1) % h.size()], h[i]);
      push_pm(e);
      push_pm(perp(e));
    }
    for (const auto& r : R) {
      push_pm(r);
      push_pm(perp(r));
    }
  }
  std::vector<Halfspace> hs;
  for (const auto& n : cand) {
    bool bounded = true;
    for (const auto& r : R)
      if (dot(n, r) > 0) {
        bounded = false;
        break;
      }
    if (!bounded) continue;
    Q s = dot(n, V.front());
    for (const auto& v : V) {
      Q t = dot(n, v);
      if (t > s) s = t;
    }
    hs.push_back({n, s});
  }
  return poly_from_hrep(d, hs);
}

}  // namespace setopt
