#pragma once

// Exact vertex/facet conversion for polyhedra in R^1 and R^2.
// Normals here are unrestricted; the lattice layer adds the cone checks.

#include <vector>

#include "setopt/rational.hpp"

namespace setopt {

struct Halfspace {
  Vec n;  // <n, z> <= b
  Q b;
  bool operator==(const Halfspace&) const = default;
};

struct PolyData {
  bool empty = true;
  int dim = 0;       // affine dimension, -1 when empty
  std::vector<Halfspace> H;
  std::vector<Vec> V;  // extreme points, or one point per minimal face when there is lineality
  std::vector<Vec> R;  // conic generators of the recession cone
};

// Minimal conic generators of cone(R) in R^d (d <= 2), primitive, sorted.
std::vector<Vec> cone_reduce(int d, const std::vector<Vec>& R);

PolyData poly_from_hrep(int d, const std::vector<Halfspace>& H);
// V must be nonempty.
PolyData poly_from_vrep(int d, const std::vector<Vec>& V, const std::vector<Vec>& R);

// Rank of a vector family in R^d, d <= 2.
int rank_of(int d, const std::vector<Vec>& vs);

}  // namespace setopt
