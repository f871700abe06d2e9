#include "setopt/builtins.hpp"

#include <cmath>
#include <numeric>

namespace setopt::builtins {

namespace {

Vec v2(long a, long b) { return Vec{Q(a), Q(b)}; }
Affine aff(Vec a, Q c) { return Affine{std::move(a), std::move(c)}; }

}  // namespace

WorkspacePtr quadrant(const std::vector<Vec>& extra) {
  return Workspace::make(OrderCone::make(2, {v2(1, 0), v2(0, 1)}), extra);
}

SetFunction heyde_a() {
  auto ws = quadrant({v2(-1, -1)});
  ParamPolyData d;
  // -z1 <= x1 - x2, -z2 <= x1 + x2, -z1 - z2 <= -x1
  d.normals = {v2(-1, 0), v2(0, -1), v2(-1, -1)};
  d.offsets = {ConcavePWL{{aff(v2(1, -1), Q(0))}}, ConcavePWL{{aff(v2(1, 1), Q(0))}},
               ConcavePWL{{aff(v2(-1, 0), Q(0))}}};
  d.domain.rows = {{v2(-1, 0), Q(0)}};
  return SetFunction::param_poly(ws, 2, std::move(d), "heyde_a");
}

SetFunction heyde_b(int max_coeff, const Q& tolerance) {
  std::vector<std::pair<long, long>> cuts;
  for (long a = 1; a <= max_coeff; ++a)
    for (long b = 1; b <= max_coeff; ++b)
      if (std::gcd(a, b) == 1) cuts.emplace_back(a, b);
  auto ws = quadrant({v2(-1, -1)});
  OracleData o;
  o.tolerance = tolerance;
  o.eval = [ws, cuts](const Vec& x) {
    if (x[0] < 0 || x[0] > 1) return empty_set(*ws);
    Q s = 1 - x[0];
    if (s == 0) return cone_set(*ws);
    double sd = to_double(s);
    std::vector<Halfspace> H{{v2(-1, 0), Q(0)}, {v2(0, -1), Q(0)}};
    for (auto [a, b] : cuts) {
      // a z1 + b z2 >= 2 s sqrt(ab) supports s H
      Q rhs = from_double(2.0 * sd * std::sqrt(static_cast<double>(a * b)));
      H.push_back({v2(-a, -b), Q(-rhs)});
    }
    return canonicalize(*ws, H);
  };
  return SetFunction::oracle(ws, 1, std::move(o), "heyde_b");
}

SetFunction circle(const Q& tolerance) {
  auto ws = Workspace::make(OrderCone::make(1, {}));
  OracleData o;
  o.tolerance = tolerance;
  o.eval = [ws](const Vec& x) {
    Q r2 = 1 - x[0] * x[0];
    if (r2 < 0) return empty_set(*ws);
    Q r = from_double(std::sqrt(to_double(r2)));
    return canonicalize(*ws, {{Vec{Q(1)}, r}, {Vec{Q(-1)}, r}});
  };
  return SetFunction::oracle(ws, 1, std::move(o), "circle");
}

SetFunction no_solution_line() {
  auto ws = quadrant({v2(-1, -1)});
  ParamPolyData d;
  d.normals = {v2(-1, 0), v2(0, -1)};
  d.offsets = {ConcavePWL{{aff(Vec{Q(1)}, Q(0))}}, ConcavePWL{{aff(Vec{Q(1)}, Q(0))}}};
  return SetFunction::param_poly(ws, 1, std::move(d), "no_solution_line");
}

SetFunction abs_diagonal() {
  auto ws = quadrant({v2(-1, -1)});
  ParamPolyData d;
  ConcavePWL minus_abs{{aff(Vec{Q(1)}, Q(0)), aff(Vec{Q(-1)}, Q(0))}};
  d.normals = {v2(-1, 0), v2(0, -1)};
  d.offsets = {minus_abs, minus_abs};
  return SetFunction::param_poly(ws, 1, std::move(d), "abs_diagonal");
}

ResidualExample example23() {
  ResidualExample e;
  e.ws = Workspace::make(OrderCone::make(2, {v2(0, 1)}));
  e.A = cone_set(*e.ws);
  e.B = canonicalize(*e.ws, {{v2(1, 0), Q(1)}, {v2(-1, 0), Q(1)}, {v2(0, -1), Q(0)}});
  return e;
}

VectorFunction abs_pair() {
  ConvexPWL a{{aff(Vec{Q(1)}, Q(0)), aff(Vec{Q(-1)}, Q(0))}};
  ConvexPWL b{{aff(Vec{Q(1)}, Q(-1)), aff(Vec{Q(-1)}, Q(1))}};
  return VectorFunction::pwl(quadrant(), 1, {a, b}, {}, "abs_pair");
}

VectorFunction infdir_trail(const Q& tolerance) {
  auto eval = [](const Vec& x) -> std::optional<Vec> {
    if (x[0] < 0) return std::nullopt;
    if (x[0] == 0) return v2(0, 0);
    return Vec{Q(-1), Q(-1) / x[0]};
  };
  return VectorFunction::oracle(quadrant(), 1, eval, tolerance, "infdir_trail");
}

PolyTrail infdir_example_trail() { return PolyTrail{{{Q(0), Q(-1)}, {Q(0), Q(0), Q(-1)}}}; }

}  // namespace setopt::builtins
