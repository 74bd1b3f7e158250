#pragma once

#include <iosfwd>
#include <string>

#include "visco/config.hpp"
#include "visco/diagnostics.hpp"
#include "visco/stepper.hpp"

namespace visco {

/// Process exit codes of the command line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitConfig = 2,
  kExitSolver = 3,      // the simulation did not reach T
  kExitInvariant = 4,   // completed, but an invariant suite failed
  kExitRecord = 5,      // record missing, unreadable or not writable
};

int exit_code_for(const DiagnosticsReport& report);

/// <output.directory>/<output.name>
std::string record_dir(const ScenarioConfig& cfg);

struct RunResult {
  Scenario scenario;
  SimulationRecord record;
  DiagnosticsReport report;
  std::string dir;  // empty when nothing was written
};

/// Builds, runs and evaluates a scenario; writes the record unless `write` is
/// false. Progress lines go to `progress` when given. Throws ConfigError.
RunResult run_config(const ScenarioConfig& cfg, const std::string& base_dir, bool write, std::ostream* progress = nullptr);

}  // namespace visco
