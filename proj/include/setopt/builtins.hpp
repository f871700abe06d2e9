#pragma once

#include "setopt/setfun.hpp"
#include "setopt/vectoropt.hpp"

namespace setopt::builtins {

// R^2 ordered by the nonnegative quadrant, with extra scalarization directions.
WorkspacePtr quadrant(const std::vector<Vec>& extra = {});

// Polyhedral function with a minimal value at every point of its domain x1 >= 0.
SetFunction heyde_a();
// x -> (1 - x) {z1 > 0, z1 z2 >= 1} on [0, 1], f(1) = C. Polyhedral outer approximation
// with tangent cuts for coprime directions (a, b), 1 <= a, b <= max_coeff. Only x = 1 is minimal.
SetFunction heyde_b(int max_coeff = 6, const Q& tolerance = Q(1, 1000000));
// x -> [-sqrt(1 - x^2), sqrt(1 - x^2)] in R with C = {0}.
SetFunction circle(const Q& tolerance = Q(1, 1000000));
// x -> {(-x, -x)} + R^2_+ on R.
SetFunction no_solution_line();
// x -> {(|x|, |x|)} + R^2_+ on R.
SetFunction abs_diagonal();

struct ResidualExample {
  WorkspacePtr ws;
  UpperSet A, B;
};
// A = C = cone{(0,1)}, B = {-1 <= z1 <= 1, z2 >= 0}.
ResidualExample example23();

// psi(x) = (|x|, |x - 1|) on R, ordered by the quadrant.
VectorFunction abs_pair();
// Oracle on s >= 0 with psi(0) = 0 and psi(s) = (-1, -1/s): the quotient at s is (-t, -t^2) for t = 1/s.
VectorFunction infdir_trail(const Q& tolerance = Q(1, 1000000));
// z_t = (-t, -t^2) as t -> +inf.
PolyTrail infdir_example_trail();

}  // namespace setopt::builtins
