#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "visco/config.hpp"
#include "visco/diagnostics.hpp"
#include "visco/stepper.hpp"

namespace visco {

/// Missing, unreadable or malformed record files.
class RecordError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Version string baked in at build time (git describe).
const char* version_string();

/// Files of a record directory, in the order they are checked.
const std::vector<std::string>& record_files();

/// Column names of ledger.csv. The first fourteen are the fixed public ones.
const std::vector<std::string>& ledger_columns();

/// Writes config.cfg, meta.json, mesh.txt, initial_velocity.csv, ledger.csv,
/// intervals.csv, frames.csv with frames/NNNN.csv, contacts.csv and report.txt.
void write_record(const std::string& dir, const ScenarioConfig& cfg, const Scenario& scn, const SimulationRecord& rec,
                  const DiagnosticsReport& report);

struct StoredFrame {
  int step = 0;
  double t = 0.0;
  Eigen::VectorXd positions;
};

struct StoredAtom {
  double t = 0.0;
  ContactAtom atom;
};

/// Raw contents of a record directory.
struct StoredRecord {
  std::string dir;
  ScenarioConfig config;
  std::string version;
  bool completed = false;
  std::string failure;
  double runtime_seconds = 0.0;
  int halvings = 0;
  int not_converged = 0;
  std::map<std::string, std::string> outcomes;  // in-run suite outcomes
  std::vector<std::string> columns;
  std::vector<std::vector<double>> ledger;  // one row per accepted step, by column
  std::vector<std::string> status;
  std::vector<std::vector<double>> intervals;
  std::vector<StoredFrame> frames;
  std::vector<StoredAtom> atoms;

  double value(std::size_t row, const std::string& column) const;
};

/// Throws RecordError naming every missing file, or the first malformed one.
StoredRecord read_record(const std::string& dir);

/// Recomputes the suite evidence from frames, contacts, mesh and config alone,
/// and lists where the stored ledger disagrees with the recomputation.
Evidence recompute_evidence(const StoredRecord& rec);

/// Offline report of a record directory.
DiagnosticsReport check_record(const std::string& dir);

}  // namespace visco
