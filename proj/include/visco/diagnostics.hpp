#pragma once

#include <iosfwd>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "visco/config.hpp"
#include "visco/stepper.hpp"

namespace visco {

/// Pass thresholds of the invariant suites. They are fixed; only the
/// contact-geometry tolerances come from the scenario.
struct SuiteTolerances {
  double descent = 1e-10;         // J_k(eta_k) - J_k(eta_{k-1}) <= descent * scale
  double energy = 1e-8;           // slack >= -energy * scale
  double momentum = 1e-8;         // h * residual <= momentum * scale, per step
  double drift_interval = 1e-10;  // isolated bodies: |P(end) - P(start)| per interval
  double drift_total = 1e-8;      // isolated bodies: |P(T) - P(0)|, relative
  double action_reaction = 1e-12; // |sum of a self pair's atoms| / largest atom
  double ledger_match = 1e-9;     // stored ledger vs recomputed values, relative
  double theta_tol_deg = 5.0;
  double delta_opp = 0.1;
};

/// Structure of the contact forces over a run (or one step).
struct ContactStructure {
  int atoms = 0;
  int self_pairs = 0;
  double min_magnitude = std::numeric_limits<double>::infinity();
  /// Angle between an atom and the interior normal at its contact point. At a
  /// polygon vertex the normal is the cone between the two incident edge
  /// normals; a target atom pair acts at a point of its edge.
  double worst_angle_deg = 0.0;
  /// Same against the averaged vertex normal (reported only).
  double worst_vertex_angle_deg = 0.0;
  /// max |sum of a self pair's atoms| / its largest atom.
  double worst_action_reaction = 0.0;
  /// max 1 + n(witness) . n(target) over self pairs (reported only).
  double worst_opposition = 0.0;
  bool obstacle_contact = false;

  void merge(const ContactStructure& o);
};

ContactStructure analyze_contact_force(const Deformation& eta, const ContactForce& f);

/// Everything the suites look at, gathered either from a live run or from a
/// stored record. Per-step vectors have one entry per ledger row (row 0 is
/// the initial state).
struct Evidence {
  std::string scenario;
  bool completed = false;
  std::string failure;
  double h = 0.0;
  double mass = 0.0;  // rho |Q|
  bool isolated = false;  // no obstacles, no pinned vertices, no force
  bool expect_rebound = false;

  std::vector<double> t;
  std::vector<int> interval;
  std::vector<double> descent, descent_scale;
  std::vector<double> global_slack, global_scale;
  std::vector<double> momentum_residual, momentum_scale;  // residual already multiplied by h
  std::vector<Vec2> momentum;
  std::vector<double> min_det, min_gap;
  std::vector<char> obstacle_contact;
  std::vector<double> interval_slack, interval_scale;
  std::vector<double> cn_deficit, cn_tolerance, cn_time;  // frames only
  Vec2 impulse = Vec2::Zero();  // total obstacle impulse

  ContactStructure contact;
  double sigma_l2 = 0.0;

  /// Inconsistencies between stored and recomputed values, by suite name.
  std::map<std::string, std::vector<std::string>> mismatches;

  double runtime_seconds = 0.0;
  int halvings = 0;
  int not_converged = 0;
};

struct SuiteResult {
  std::string name;
  bool applicable = true;
  bool pass = true;
  double worst = 0.0;  // in units of the limit where that makes sense
  std::string detail;
};

struct DiagnosticsReport {
  std::string scenario;
  bool completed = false;
  std::string failure;
  std::vector<SuiteResult> suites;
  int steps = 0;
  int frames = 0;
  double runtime_seconds = 0.0;
  int halvings = 0;
  int not_converged = 0;

  bool all_pass() const;
  const SuiteResult* find(const std::string& name) const;
  /// "name: PASS|FAIL|n/a" per suite, in order.
  std::map<std::string, std::string> outcomes() const;
  void write(std::ostream& os) const;
};

/// Suite names in report order.
const std::vector<std::string>& suite_names();

DiagnosticsReport evaluate(const Evidence& ev, const SuiteTolerances& tol = {});

SuiteTolerances tolerances_for(const ScenarioConfig& cfg);

/// Evidence from the solver's own ledger and contact forces.
Evidence gather_run_evidence(const Scenario& scn, const SimulationRecord& rec, bool expect_rebound);

}  // namespace visco
