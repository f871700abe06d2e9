#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "setopt/setfun.hpp"

namespace setopt {

// Geometric t-grid for oracle functions: t = t0 * rho^k, k < steps.
struct TGrid {
  Q t0 = 1;
  Q rho = Q(1, 2);
  int steps = 20;
  std::vector<Q> values() const;
};

struct DerivativeResult {
  UpperSet value;
  bool exact = true;
  // Exact results: the quotient equals `value` for all 0 < t < t_star.
  // t_star = 0 means the limit is exact but not attained at any positive t.
  std::optional<ExtReal> t_star;
  std::vector<std::pair<Q, UpperSet>> samples;
  std::string diagnostic;
};

struct ScalarDini {
  ExtReal value;
  bool exact = true;
};

UpperSet diff_quotient(const SetFunction& f, const Vec& x, const Vec& u, const Q& t);
DerivativeResult set_derivative(const SetFunction& f, const Vec& x, const Vec& u, const TGrid& grid = {});
ScalarDini scalar_dini(const SetFunction& f, const Vec& zstar, const Vec& x, const Vec& u, const TGrid& grid = {});
UpperSet scalarized_derivative_intersection(const SetFunction& f, const Vec& x, const Vec& u,
                                            const std::vector<Vec>& mstar, const TGrid& grid = {});

struct RegularityReport {
  bool SR = true;
  bool WR = true;
  bool exact = true;
  std::vector<Vec> sr_failures;
  UpperSet derivative;
  UpperSet scalarized;
};

RegularityReport regularity_check(const SetFunction& f, const Vec& x, const Vec& u, const std::vector<Vec>& mstar,
                                  const TGrid& grid = {});

}  // namespace setopt
