#pragma once

#include <optional>
#include <string>

#include "setopt/json_io.hpp"
#include "setopt/plot.hpp"

namespace setopt {

struct RunOptions {
  std::optional<Q> tolerance;  // overrides the scenario tolerance for oracle builtins
  int jobs = 1;
};

struct ScenarioRun {
  io::Json report;
  std::string text;  // task summary lines and implication matrices
  WorkspacePtr plot_ws;
  NamedSets plot_sets;
  long failures = 0;     // theorem violations on exact data and unmet expectations
  long task_errors = 0;  // tasks that raised an error
};

// Both throw Error(ValidationError) on malformed input.
io::Json parse_scenario(const std::string& text);
io::Json load_scenario(const std::string& path);

// Validation problems throw Error(ValidationError); errors inside a task are recorded in the report.
ScenarioRun run_scenario(const io::Json& scenario, const RunOptions& opt = {});

}  // namespace setopt
