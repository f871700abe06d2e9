#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "setopt/extreal.hpp"
#include "setopt/polyhedron.hpp"
#include "setopt/rational.hpp"

namespace setopt {

// Closed convex polyhedral cone ordering Z = R^d.
class OrderCone {
 public:
  // Empty generator list means C = {0}.
  static OrderCone make(int dim, const std::vector<Vec>& generators);

  int dim() const { return dim_; }
  const std::vector<Vec>& generators() const { return gens_; }
  const std::vector<Vec>& facet_normals() const { return normals_; }

  bool contains(const Vec& z) const;        // z in C
  bool in_dual(const Vec& n) const;         // n in C^-
  bool in_lineality(const Vec& z) const;    // z in C ∩ -C
  bool pointed() const;

 private:
  int dim_ = 0;
  std::vector<Vec> gens_;
  std::vector<Vec> normals_;
};

// Element of G(Z,C). Empty is the top element, the poly with no constraints is Z.
struct UpperSet {
  bool empty = true;
  int d = 0;
  int aff_dim = -1;
  std::vector<Halfspace> H;
  std::vector<Vec> V;
  std::vector<Vec> R;

  bool is_all() const { return !empty && H.empty(); }
};

class Workspace {
 public:
  // Directions default to the facet normals of the cone; extra ones are validated and merged.
  static std::shared_ptr<const Workspace> make(const OrderCone& cone, const std::vector<Vec>& extra_directions = {});

  int dim() const { return cone_.dim(); }
  const OrderCone& cone() const { return cone_; }
  const std::vector<Vec>& directions() const { return dirs_; }

  // Canonical primitive form of a direction, validated against C^-.
  Vec canonical_direction(const Vec& z) const;
  // Directions plus extras, deduplicated, in canonical order.
  std::vector<Vec> merged_directions(const std::vector<Vec>& extra) const;

 private:
  OrderCone cone_;
  std::vector<Vec> dirs_;
};

using WorkspacePtr = std::shared_ptr<const Workspace>;

UpperSet empty_set(const Workspace& ws);
UpperSet all_set(const Workspace& ws);
UpperSet cone_set(const Workspace& ws);
UpperSet point_plus_cone(const Workspace& ws, const Vec& p);

// Throws NormalOutsideDualCone / InvalidArgument on bad input.
UpperSet canonicalize(const Workspace& ws, const std::vector<Halfspace>& raw);
// Closed convex hull of points + rays + C. Points must be nonempty.
UpperSet hull(const Workspace& ws, const std::vector<Vec>& points, const std::vector<Vec>& rays);
// Projection output: constraints valid for a C-closed set; a normal outside C^- certifies emptiness.
UpperSet canonicalize_projected(const Workspace& ws, const std::vector<Halfspace>& raw);

bool leq(const UpperSet& a, const UpperSet& b);  // a ≼ b, i.e. b ⊆ a
bool set_equal(const UpperSet& a, const UpperSet& b);
bool contains_point(const UpperSet& a, const Vec& z);

UpperSet inf_family(const Workspace& ws, const std::vector<UpperSet>& sets);
UpperSet sup_family(const Workspace& ws, const std::vector<UpperSet>& sets);
UpperSet add(const Workspace& ws, const UpperSet& a, const UpperSet& b);
UpperSet scale(const Workspace& ws, const Q& t, const UpperSet& a);
UpperSet residual_diff(const Workspace& ws, const UpperSet& a, const UpperSet& b);
UpperSet recession(const Workspace& ws, const UpperSet& a);

ExtReal support(const Vec& zstar, const UpperSet& a);
ExtReal neg_support(const Vec& zstar, const UpperSet& a);

// {z : phi <= -<z*, z>}, Empty for phi = +inf and Z for phi = -inf.
UpperSet level_halfspace(const Workspace& ws, const Vec& zstar, const ExtReal& phi);

}  // namespace setopt
