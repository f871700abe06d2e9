#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "setopt/kernel.hpp"

namespace setopt {

struct Affine {
  Vec a;
  Q c;
  Q eval(const Vec& x) const { return dot(a, x) + c; }
};

// Pointwise minimum of affine pieces.
struct ConcavePWL {
  std::vector<Affine> pieces;
  Q eval(const Vec& x) const;
};

// Pointwise maximum of affine pieces.
struct ConvexPWL {
  std::vector<Affine> pieces;
  Q eval(const Vec& x) const;
};

// {x : <s, x> <= d} for each row; no rows means the whole space.
struct XPolyhedron {
  std::vector<Halfspace> rows;
  bool contains(const Vec& x) const;
  // sup{t >= 0 : x + t u in S}, assuming x in S.
  ExtReal exit_time(const Vec& x, const Vec& u) const;
};

struct ParamPolyData {
  std::vector<Vec> normals;
  std::vector<ConcavePWL> offsets;
  XPolyhedron domain;
};

struct EpiVectorData {
  std::vector<ConvexPWL> components;
  XPolyhedron domain;
};

struct OracleData {
  std::function<UpperSet(const Vec&)> eval;
  bool declared_convex = true;
  Q tolerance = Q(1, 1000000);
};

class SetFunction {
 public:
  enum class Variant { ParamPoly, EpiVector, Oracle };

  static SetFunction param_poly(WorkspacePtr ws, int xdim, ParamPolyData data, std::string name = "f");
  static SetFunction epi_vector(WorkspacePtr ws, int xdim, EpiVectorData data, std::string name = "f");
  static SetFunction oracle(WorkspacePtr ws, int xdim, OracleData data, std::string name = "f");

  Variant variant() const { return variant_; }
  bool exact() const { return variant_ != Variant::Oracle; }
  bool declared_convex() const { return variant_ != Variant::Oracle || oracle_->declared_convex; }
  Q tolerance() const { return variant_ == Variant::Oracle ? oracle_->tolerance : Q(0); }
  const Workspace& ws() const { return *ws_; }
  WorkspacePtr ws_ptr() const { return ws_; }
  int xdim() const { return xdim_; }
  const std::string& name() const { return name_; }

  const ParamPolyData* param_poly_data() const { return pp_.get(); }
  const EpiVectorData* epi_vector_data() const { return ev_.get(); }

  bool in_domain(const Vec& x) const;
  UpperSet eval(const Vec& x) const;
  // phi_{f,z*}(x) = -sigma(z* | f(x))
  ExtReal scalarize(const Vec& zstar, const Vec& x) const;
  UpperSet level_function(const Vec& zstar, const Vec& x) const;
  // psi(x) for EpiVector.
  Vec psi(const Vec& x) const;

  // Sorted times t in (0, t_max) where the combinatorial structure of f(x + t u) may change
  // (offset kinks, parallel crossings, triple concurrencies, domain exit). Exact variants only.
  std::vector<Q> event_times(const Vec& x, const Vec& u, const ExtReal& t_max) const;
  // Smallest positive event, +inf if none.
  ExtReal first_event(const Vec& x, const Vec& u) const;
  ExtReal exit_time(const Vec& x, const Vec& u) const;

 private:
  Variant variant_ = Variant::ParamPoly;
  WorkspacePtr ws_;
  int xdim_ = 1;
  std::string name_;
  std::shared_ptr<const ParamPolyData> pp_;
  std::shared_ptr<const EpiVectorData> ev_;
  std::shared_ptr<const OracleData> oracle_;
};

Vec segment_point(const Vec& x0, const Vec& x, const Q& t);

// Translation set for the inf-translation: finite points, or conv(points) + cone(rays).
struct Translation {
  enum class Kind { Finite, Polyhedron } kind = Kind::Finite;
  std::vector<Vec> points;
  std::vector<Vec> rays;
};

struct TranslationResult {
  UpperSet value;
  bool exact = true;
};

TranslationResult inf_translation(const SetFunction& f, const Translation& M, const Vec& x);
// x -> f^(x; co M) as a parampoly function (single-piece offsets), for parampoly f.
SetFunction translated_function(const SetFunction& f, const Translation& M);

struct LscProbe {
  std::vector<Q> radii{Q(1, 10), Q(1, 100), Q(1, 1000), Q(1, 10000), Q(1, 100000), Q(1, 1000000)};
  int samples = 8;
};

struct LscVerdict {
  bool holds = true;
  bool approximate = false;
  std::optional<Q> witness_radius;
  std::vector<Vec> failing_directions;
  std::string note;
};

// Lattice l.s.c. of the segment restriction t -> f(x0 + t(x - x0)) at t = 0.
LscVerdict lattice_lsc_probe(const SetFunction& f, const Vec& x0, const Vec& x, const LscProbe& probe = {});
// Scalar l.s.c. at t = 0 of each phi_{f,z*} along the same segment.
LscVerdict cminus_lsc_probe(const SetFunction& f, const Vec& x0, const Vec& x, const std::vector<Vec>& mstar,
                            const LscProbe& probe = {});

}  // namespace setopt
