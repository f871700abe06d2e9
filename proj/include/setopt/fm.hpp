#pragma once

#include <optional>
#include <vector>

#include "setopt/rational.hpp"

namespace setopt {

struct LinIneq {
  Vec a;  // a . x <= b
  Q b;
};

// Drops duplicate rows (after primitive scaling) and trivial rows.
// Returns nullopt if a row 0 <= b with b < 0 is present.
std::optional<std::vector<LinIneq>> fm_normalize(const std::vector<LinIneq>& sys);

// Eliminates variable k; the result has one fewer column. nullopt = infeasible.
std::optional<std::vector<LinIneq>> fm_eliminate(const std::vector<LinIneq>& sys, std::size_t k);

// Projection onto the first `keep` variables. nullopt = infeasible.
std::optional<std::vector<LinIneq>> fm_project(const std::vector<LinIneq>& sys, std::size_t keep);

bool fm_feasible(const std::vector<LinIneq>& sys);

}  // namespace setopt
