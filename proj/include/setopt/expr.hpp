#pragma once

#include <string_view>

#include "setopt/kernel.hpp"

namespace setopt {

// Set expressions over G(Z, C):
//   a | b    infimum (closed convex hull of the union)
//   a & b    supremum (intersection)
//   a + b    sum,  a -: b (or a ÷ b)  inf-residuation
//   q * a    scaling by a rational q >= 0
//   C, Z, Empty, pt(z1, z2), half(n1, n2 : b), hull((p), (p); (ray), ...), rec(a), infdir(z1, z2), (a)
// Precedence: | lowest, then &, then + and -:, then scaling.
UpperSet eval_expr(const Workspace& ws, std::string_view text);

// Generators as "g1; g2; ..." with comma separated rational coordinates, e.g. "1,0; 0,1".
OrderCone parse_cone(std::string_view text);

}  // namespace setopt
