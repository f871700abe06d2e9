#pragma once

#include <optional>
#include <string>
#include <vector>

#include "setopt/calculus.hpp"

namespace setopt {

enum class Ineq { svi_I, SVI_I, mvi_I, MVI_I, svi_M, SVI_M, svi_M2, mvi_M, MVI_M, mvi_M_finite };

const char* ineq_name(Ineq id);
std::optional<Ineq> parse_ineq(const std::string& s);
const std::vector<Ineq>& all_ineqs();

// Finite quantifier domain; `region` (if set) is the polyhedral set whose infimum stands for inf f[X].
struct CandidateSpace {
  std::vector<Vec> points;
  std::optional<Translation> region;
};

struct Witness {
  std::size_t index = 0;  // position in the candidate list
  Vec x;
  std::optional<Vec> zstar;
  std::optional<Q> t;
  std::string note;
};

struct ViReport {
  Ineq id = Ineq::svi_I;
  bool holds = true;
  bool exact = true;
  std::vector<Witness> witnesses;
  // SVI_M only: agreement with the intersection form f'(x0, x - x0) ∩ -0+f(x0) = Empty
  std::optional<bool> alt_form_agrees;
};

// Per-candidate data shared by all checkers.
struct CandidateData {
  Vec x;
  UpperSet value;
  bool in_dom = false;
  bool equals_base = false;
  std::vector<ExtReal> phi;        // per direction
  DerivativeResult d_base;         // f'(x0, x - x0)
  std::vector<ScalarDini> s_base;  // per direction
  DerivativeResult d_cand;         // f'(x, x0 - x)
  std::vector<ScalarDini> s_cand;
  bool sr_base = true, wr_base = true, sr_cand = true, wr_cand = true;
};

struct Analysis {
  WorkspacePtr ws;
  Vec x0;
  UpperSet base;
  UpperSet base_rec;
  std::vector<Vec> dirs;
  std::vector<ExtReal> phi0;
  std::vector<CandidateData> cands;
  bool exact = true;
};

// Directions fine enough that finite scalar conditions match their C^- versions on polyhedral data.
std::vector<Vec> full_directions(const SetFunction& f, const std::vector<Vec>& extra = {});

// With derivatives = false only values and scalarizations are filled in.
Analysis analyze(const SetFunction& f, const Vec& x0, const std::vector<Vec>& space, const std::vector<Vec>& dirs,
                 int jobs = 1, bool derivatives = true);
// `finite` restricts the existential direction of mvi_M_finite; it must be a subset of a.dirs.
ViReport evaluate(const Analysis& a, Ineq id, const std::vector<Vec>& finite = {});

ViReport check(const SetFunction& f, Ineq id, const Vec& x0, const std::vector<Vec>& space,
               const std::vector<Vec>& mstar, int jobs = 1);

struct InfimumReport {
  bool a = true, b = true, c = true, d = true, e = true, f = true;
  bool consistent = true;  // (a)-(e) agree and (e) implies (f)
  UpperSet infimum;
  std::vector<Witness> witnesses;
};
InfimumReport infimum_at_point(const Analysis& a);
InfimumReport infimum_at_point_check(const SetFunction& f, const Vec& x0, const std::vector<Vec>& space,
                                     const std::vector<Vec>& mstar);

struct MinimalOptions {
  bool escape = false;                       // also compare against x0 + s e_i
  std::vector<Q> scales{Q(1), Q(10), Q(100)};
};

struct MinimalReport {
  bool a = true, b = true, c = true, d = true, e = true;
  bool consistent = true;
  std::vector<Witness> dominators;
  std::vector<Vec> probes;
};
MinimalReport minimal_from(const Analysis& a);
MinimalReport minimal_check(const SetFunction& f, const Vec& x0, const std::vector<Vec>& space,
                            const std::vector<Vec>& mstar, const MinimalOptions& opt = {});

struct InfimizerReport {
  bool infimizer = false;
  bool exact = true;
  UpperSet inf_space, fhat_M, fhat_coM;
  bool co_equal = false;  // f^(0; M) = f^(0; co M)
  // svi_I of f^(.; co M) at 0 along coordinate and candidate directions (parampoly only)
  std::optional<bool> translated_svi_I;
};
InfimizerReport infimizer_check(const SetFunction& f, const Translation& M, const CandidateSpace& space,
                                const std::vector<Vec>& mstar);

struct SolutionReport {
  InfimizerReport infimizer;
  std::vector<Vec> members;
  std::vector<bool> minimal;
  bool solution = false;
};
// Minimality is tested at the points of M (finite M) or at the space points inside co M plus its vertices.
SolutionReport solution_check(const SetFunction& f, const Translation& M, const CandidateSpace& space,
                              const std::vector<Vec>& mstar, const MinimalOptions& opt = {});

struct Implication {
  std::string name;
  bool premise = false;
  bool conclusion = false;
  std::string status;  // "ok", "vacuous", "violated", "inconclusive"
};

struct AuditReport {
  std::vector<Vec> space;  // refined star space actually used
  std::vector<Vec> full_dirs, finite_dirs;
  std::vector<ViReport> reports;
  InfimumReport infimum;
  MinimalReport minimal;
  bool lattice_lsc = true, cminus_lsc_full = true, cminus_lsc_finite = true;
  bool sr_base = true, wr_base = true, sr_cand = true, wr_cand = true;
  bool segment_char = true;  // mvi_M against the segment characterization
  std::vector<Implication> implications;
  bool exact = true;
  long violations = 0;
};

// Star refinement of a grid around x0: every candidate plus the structural events and midpoints
// on the segment from x0 to it.
std::vector<Vec> star_space(const SetFunction& f, const Vec& x0, const std::vector<Vec>& grid);

AuditReport implication_audit(const SetFunction& f, const Vec& x0, const std::vector<Vec>& grid,
                              const std::vector<Vec>& finite_dirs, int jobs = 1);

}  // namespace setopt
