#pragma once

#include <map>
#include <string>

#include "kit/rng.hpp"
#include "kit/suite.hpp"
#include "setopt/setfun.hpp"

namespace kit {

// Random ParamPoly with normals in C^-, concave PWL offsets (1-3 pieces) and a domain containing 0.
setopt::SetFunction random_param_poly(Rng& r, setopt::WorkspacePtr ws, int xdim, int max_normals = 6);
// Random EpiVector with per-component max-of-affine data.
setopt::SetFunction random_epi_vector(Rng& r, setopt::WorkspacePtr ws, int xdim);
setopt::Vec random_direction(Rng& r, int xdim, long range = 2);

SuiteResult setfun_suite(long n, std::uint64_t seed);
SuiteResult derivative_suite(long n, std::uint64_t seed);

}  // namespace kit

namespace kit {

struct AuditStats {
  long instances = 0, violations = 0, inconclusive = 0;
  std::map<std::string, long> premise_hits;  // non-vacuous implication counts
};

SuiteResult vi_audit_suite(long n, std::uint64_t seed, AuditStats* stats = nullptr);

}  // namespace kit

namespace kit {

struct VectorStats {
  long instances = 0, minty_runs = 0, efficient_bases = 0, inefficient_bases = 0, sr_samples = 0;
};

// Random componentwise max-of-affine vector functions on cones containing the quadrant.
SuiteResult vector_suite(long n, std::uint64_t seed, VectorStats* stats = nullptr);

}  // namespace kit
