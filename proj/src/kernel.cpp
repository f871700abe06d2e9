#include "setopt/kernel.hpp"

#include <algorithm>

#include "setopt/error.hpp"

namespace setopt {

namespace {

UpperSet from_poly(int d, const PolyData& p) {
  UpperSet s;
  s.d = d;
  s.empty = p.empty;
  if (p.empty) return s;
  s.aff_dim = p.dim;
  s.H = p.H;
  s.V = p.V;
  s.R = p.R;
  return s;
}

void check_dim(const Workspace& ws, const Vec& v, const char* what) {
  if (static_cast<int>(v.size()) != ws.dim())
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has wrong dimension");
}

void sort_dirs(int d, std::vector<Vec>& dirs) {
  if (d == 2) std::sort(dirs.begin(), dirs.end(), angle_less);
  else std::sort(dirs.begin(), dirs.end(), [](const Vec& a, const Vec& b) { return a[0] > b[0]; });
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
}

}  // namespace

OrderCone OrderCone::make(int dim, const std::vector<Vec>& generators) {
  if (dim != 1 && dim != 2) throw Error(ErrorCode::DimensionUnsupported, "cone dimension must be 1 or 2");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != dim) throw Error(ErrorCode::DimensionMismatch, "cone generator dimension");
    if (is_zero(g)) throw Error(ErrorCode::InvalidArgument, "cone generator must be nonzero");
  }
  OrderCone c;
  c.dim_ = dim;
  c.gens_ = cone_reduce(dim, generators);
  PolyData p = poly_from_vrep(dim, {zeros(dim)}, c.gens_);
  for (const auto& h : p.H) c.normals_.push_back(h.n);
  if (c.normals_.empty()) throw Error(ErrorCode::InvalidArgument, "cone is the whole space: C^- is trivial");
  return c;
}

bool OrderCone::contains(const Vec& z) const {
  for (const auto& n : normals_)
    if (dot(n, z) > 0) return false;
  return true;
}

bool OrderCone::in_dual(const Vec& n) const {
  for (const auto& g : gens_)
    if (dot(n, g) > 0) return false;
  return true;
}

bool OrderCone::in_lineality(const Vec& z) const { return contains(z) && contains(neg(z)); }

bool OrderCone::pointed() const {
  for (const auto& g : gens_)
    if (contains(neg(g))) return false;
  return true;
}

std::shared_ptr<const Workspace> Workspace::make(const OrderCone& cone, const std::vector<Vec>& extra) {
  auto ws = std::make_shared<Workspace>();
  ws->cone_ = cone;
  for (const auto& n : cone.facet_normals()) ws->dirs_.push_back(primitive(n));
  for (const auto& z : extra) ws->dirs_.push_back(ws->canonical_direction(z));
  sort_dirs(cone.dim(), ws->dirs_);
  return ws;
}

Vec Workspace::canonical_direction(const Vec& z) const {
  check_dim(*this, z, "direction");
  if (is_zero(z)) throw Error(ErrorCode::InvalidArgument, "direction must be nonzero");
  if (!cone_.in_dual(z)) throw Error(ErrorCode::NormalOutsideDualCone, "direction " + to_string(z) + " is not in C^-");
  return primitive(z);
}

std::vector<Vec> Workspace::merged_directions(const std::vector<Vec>& extra) const {
  std::vector<Vec> out = dirs_;
  for (const auto& z : extra) out.push_back(canonical_direction(z));
  sort_dirs(dim(), out);
  return out;
}

UpperSet empty_set(const Workspace& ws) {
  UpperSet s;
  s.d = ws.dim();
  return s;
}

UpperSet all_set(const Workspace& ws) { return from_poly(ws.dim(), poly_from_hrep(ws.dim(), {})); }

UpperSet cone_set(const Workspace& ws) { return point_plus_cone(ws, zeros(ws.dim())); }

UpperSet point_plus_cone(const Workspace& ws, const Vec& p) {
  check_dim(ws, p, "point");
  return hull(ws, {p}, {});
}

UpperSet canonicalize(const Workspace& ws, const std::vector<Halfspace>& raw) {
  for (const auto& h : raw) {
    check_dim(ws, h.n, "normal");
    if (is_zero(h.n)) throw Error(ErrorCode::InvalidArgument, "constraint normal must be nonzero");
    if (!ws.cone().in_dual(h.n))
      throw Error(ErrorCode::NormalOutsideDualCone, "normal " + to_string(h.n) + " is not in C^-");
  }
  return from_poly(ws.dim(), poly_from_hrep(ws.dim(), raw));
}

UpperSet canonicalize_projected(const Workspace& ws, const std::vector<Halfspace>& raw) {
  std::vector<Halfspace> keep;
  for (const auto& h : raw) {
    check_dim(ws, h.n, "normal");
    if (is_zero(h.n)) {
      if (h.b < 0) return empty_set(ws);
      continue;
    }
    if (!ws.cone().in_dual(h.n)) return empty_set(ws);
    keep.push_back(h);
  }
  return from_poly(ws.dim(), poly_from_hrep(ws.dim(), keep));
}

UpperSet hull(const Workspace& ws, const std::vector<Vec>& points, const std::vector<Vec>& rays) {
  if (points.empty()) return empty_set(ws);
  std::vector<Vec> R = rays;
  for (const auto& g : ws.cone().generators()) R.push_back(g);
  for (const auto& p : points) check_dim(ws, p, "point");
  for (const auto& r : rays) check_dim(ws, r, "ray");
  return from_poly(ws.dim(), poly_from_vrep(ws.dim(), points, R));
}

bool leq(const UpperSet& a, const UpperSet& b) {
  if (b.empty) return true;
  if (a.empty) return false;
  for (const auto& h : a.H) {
    for (const auto& v : b.V)
      if (dot(h.n, v) > h.b) return false;
    for (const auto& r : b.R)
      if (dot(h.n, r) > 0) return false;
  }
  return true;
}

bool set_equal(const UpperSet& a, const UpperSet& b) { return leq(a, b) && leq(b, a); }

bool contains_point(const UpperSet& a, const Vec& z) {
  if (a.empty) return false;
  for (const auto& h : a.H)
    if (dot(h.n, z) > h.b) return false;
  return true;
}

UpperSet inf_family(const Workspace& ws, const std::vector<UpperSet>& sets) {
  std::vector<Vec> V, R;
  for (const auto& s : sets) {
    if (s.empty) continue;
    V.insert(V.end(), s.V.begin(), s.V.end());
    R.insert(R.end(), s.R.begin(), s.R.end());
  }
  if (V.empty()) return empty_set(ws);
  return hull(ws, V, R);
}

UpperSet sup_family(const Workspace& ws, const std::vector<UpperSet>& sets) {
  std::vector<Halfspace> H;
  for (const auto& s : sets) {
    if (s.empty) return empty_set(ws);
    H.insert(H.end(), s.H.begin(), s.H.end());
  }
  return from_poly(ws.dim(), poly_from_hrep(ws.dim(), H));
}

UpperSet add(const Workspace& ws, const UpperSet& a, const UpperSet& b) {
  if (a.empty || b.empty) return empty_set(ws);
  std::vector<Vec> V, R = a.R;
  R.insert(R.end(), b.R.begin(), b.R.end());
  for (const auto& u : a.V)
    for (const auto& v : b.V) V.push_back(setopt::add(u, v));
  return hull(ws, V, R);
}

UpperSet scale(const Workspace& ws, const Q& t, const UpperSet& a) {
  if (t < 0) throw Error(ErrorCode::NegativeScalar, "scale factor must be nonnegative");
  if (t == 0) return cone_set(ws);
  if (a.empty) return a;
  UpperSet s = a;
  for (auto& h : s.H) h.b *= t;
  for (auto& v : s.V) v = setopt::scale(t, v);
  return s;
}

UpperSet residual_diff(const Workspace& ws, const UpperSet& a, const UpperSet& b) {
  if (b.empty) return all_set(ws);
  if (a.empty) return empty_set(ws);
  std::vector<Halfspace> H;
  for (const auto& h : a.H) {
    ExtReal off = residual(ExtReal(h.b), support(h.n, b));
    if (off.is_minus_inf()) return empty_set(ws);
    H.push_back({h.n, off.value()});
  }
  return from_poly(ws.dim(), poly_from_hrep(ws.dim(), H));
}

UpperSet recession(const Workspace& ws, const UpperSet& a) {
  if (a.empty) return a;
  std::vector<Halfspace> H;
  for (const auto& h : a.H) H.push_back({h.n, Q(0)});
  return from_poly(ws.dim(), poly_from_hrep(ws.dim(), H));
}

ExtReal support(const Vec& zstar, const UpperSet& a) {
  if (a.empty) return ExtReal::minus_inf();
  for (const auto& r : a.R)
    if (dot(zstar, r) > 0) return ExtReal::plus_inf();
  Q best = dot(zstar, a.V.front());
  for (const auto& v : a.V) {
    Q t = dot(zstar, v);
    if (t > best) best = t;
  }
  return ExtReal(best);
}

ExtReal neg_support(const Vec& zstar, const UpperSet& a) { return -support(zstar, a); }

UpperSet level_halfspace(const Workspace& ws, const Vec& zstar, const ExtReal& phi) {
  if (phi.is_plus_inf()) return empty_set(ws);
  if (phi.is_minus_inf()) return all_set(ws);
  return canonicalize(ws, {{zstar, Q(-phi.value())}});
}

}  // namespace setopt
