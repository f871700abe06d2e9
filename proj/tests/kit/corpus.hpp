#pragma once

#include <vector>

#include "kit/rng.hpp"
#include "kit/suite.hpp"
#include "setopt/kernel.hpp"

namespace kit {

// 0: pointed wedge (2 facets), 1: ray (3 facets), 2: trivial cone (4 facets)
setopt::WorkspacePtr random_workspace(Rng& r, int kind);
setopt::UpperSet random_set(Rng& r, const setopt::Workspace& ws);
setopt::Vec random_point(Rng& r, int d, long range = 3);

// Checks a canonical form against the raw system by independent means
// (Fourier-Motzkin feasibility, pairwise vertex enumeration, point sampling, the V-route hull).
void check_canonical_form(Rng& r, const setopt::Workspace& ws, const std::vector<setopt::Halfspace>& raw,
                          SuiteResult& out);

SuiteResult canonical_form_suite(long n, std::uint64_t seed);
SuiteResult lattice_suite(long n, std::uint64_t seed);
SuiteResult scalarization_suite(long n, std::uint64_t seed);
SuiteResult recession_suite(long n, std::uint64_t seed);

}  // namespace kit
