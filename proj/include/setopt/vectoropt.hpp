#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "setopt/vi.hpp"

namespace setopt {

class VectorFunction {
 public:
  // Componentwise max-of-affine data on the polyhedron S.
  static VectorFunction pwl(WorkspacePtr ws, int xdim, std::vector<ConvexPWL> components, XPolyhedron S = {},
                            std::string name = "psi");
  // Evaluator returning nullopt outside S.
  static VectorFunction oracle(WorkspacePtr ws, int xdim, std::function<std::optional<Vec>(const Vec&)> eval,
                               const Q& tolerance = Q(1, 1000000), std::string name = "psi");

  bool exact() const { return exact_; }
  const Workspace& ws() const { return *ws_; }
  WorkspacePtr ws_ptr() const { return ws_; }
  int xdim() const { return xdim_; }
  const std::string& name() const { return name_; }
  Q tolerance() const { return tol_; }
  const std::vector<ConvexPWL>& components() const { return comps_; }
  const XPolyhedron& domain() const { return S_; }

  bool in_domain(const Vec& x) const;
  Vec eval(const Vec& x) const;  // throws BaseOutsideDomain outside S
  // psi^C: x -> psi(x) + C on S, Empty elsewhere.
  SetFunction epigraphical() const;

 private:
  bool exact_ = true;
  WorkspacePtr ws_;
  int xdim_ = 1;
  std::string name_;
  Q tol_ = 0;
  std::vector<ConvexPWL> comps_;
  XPolyhedron S_;
  std::function<std::optional<Vec>(const Vec&)> oracle_;
};

// Element of Z u Z_inf. Infinite directions are scaled to unit L1 norm; the zero direction is the finite 0.
struct ExtendedPoint {
  bool infinite = false;
  Vec z;
  static ExtendedPoint fin(Vec z);
  static ExtendedPoint inf(const Vec& dir);
  bool operator==(const ExtendedPoint& o) const { return infinite == o.infinite && z == o.z; }
};

struct DiniLimitSet {
  std::vector<Vec> finite_points;
  std::vector<Vec> infinite_dirs;
  bool exact = true;
  std::string diagnostic;
};

struct DiniGrid {
  Q t0 = 1;
  Q rho = Q(1, 2);
  int steps = 40;
  int window = 5;
};

DiniLimitSet vector_dini(const VectorFunction& psi, const Vec& x0, const Vec& u, const DiniGrid& grid = {});

// z_inf + C
UpperSet infdir_plus_cone(const Workspace& ws, const Vec& z);

struct DiniClassification {
  bool a = true, b = true, c = true;
  std::vector<std::string> notes;
};
DiniClassification classify_dini(const VectorFunction& psi, const Vec& x0, const Vec& x, const DiniLimitSet& d,
                                 const std::vector<Vec>& mstar);

struct EfficiencyReport {
  std::vector<Vec> points;
  std::vector<bool> efficient;
  std::vector<bool> minimal;  // minimal_check on psi^C over the same points
  bool bridge = true;         // efficient == minimal everywhere
  bool identity = true;       // union of minimal values == Eff + C
  bool solution_exists = false;  // cl co (Eff + C) == cl co (psi[X] + C)
};
EfficiencyReport efficient_set(const VectorFunction& psi, const std::vector<Vec>& grid);

struct MintyReport {
  std::vector<Vec> points;  // refined candidate set
  bool efficient = true;    // x0 efficient among the points
  bool scalar_form = true;  // exists z* in M*: (-z* psi)'(p, x0 - p) < 0
  bool inner_form = true;   // psi'(p, x0 - p) inside Z \ C
  bool set_form = true;     // MVI_M for psi^C
  bool finite_form = true;  // mvi_M_finite with M* = facet normals of C
  bool single_valued = true;
  bool scalar_finite = true;  // every sampled (-z* psi)' is finite
  bool exact = true;
  std::vector<Witness> witnesses;
};
MintyReport vector_minty_check(const VectorFunction& psi, const Vec& x0, const std::vector<Vec>& grid,
                               const std::vector<Vec>& mstar,
                               const std::vector<Q>& tset = {Q(1, 8), Q(1, 4), Q(1, 2), Q(3, 4)});

// Trail t -> z_t with polynomial components (coefficients by ascending degree), t -> +inf.
struct PolyTrail {
  std::vector<std::vector<Q>> comps;
};

struct TrailLimits {
  ExtendedPoint limsup;           // outer limit of the singletons {z_t} in Z u Z_inf
  UpperSet limsup_plus_cone;      // Limsup{z_t} + C
  UpperSet lattice_liminf;        // sup_T inf_{t >= T} ({z_t} + C)
  UpperSet lattice_limsup;        // inf_T sup_{t >= T} ({z_t} + C)
  bool lattice_converges = false;
  bool commutes = false;          // Limsup{z_t} + C == lim ({z_t} + C)
};
TrailLimits trail_limits(const Workspace& ws, const PolyTrail& trail);

}  // namespace setopt
