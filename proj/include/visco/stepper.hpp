#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "visco/solver.hpp"

namespace visco {

/// Everything needed to run one simulation.
struct Scenario {
  std::string name = "scenario";
  MeshPtr mesh;
  Deformation eta0;
  /// Initial velocity eta* (flat), also the velocity history for t < 0.
  Eigen::VectorXd velocity0;
  MaterialParams material;
  std::vector<Obstacle> obstacles;
  /// Constant body force per unit reference area plus rho * gravity.
  Vec2 body_force = Vec2::Zero();
  Vec2 gravity = Vec2::Zero();

  double T = 1.0;
  int L = 16;  // outer intervals, h = T / L
  int M = 8;   // inner steps per interval, tau = h / M

  SolverSettings solver;
  int max_halvings = 6;
  /// Largest boundary-vertex displacement per accepted inner step, in units
  /// of the contact activation distance.
  double cfl = 0.5;
  double tau_max = 0.0;  // inner step cap, 0 = none
  int frame_stride = 1;     // keep every n-th inner step as a frame
  int cn_resolution = 256;  // raster for the Ciarlet-Necas deficit on frames

  double h() const { return T / L; }
  /// Flat nodal force density f (per unit reference area).
  Eigen::VectorXd force_density() const;
  /// Throws std::invalid_argument describing the first problem found.
  void validate() const;
};

/// Piecewise-constant velocity on consecutive time windows.
struct VelocitySegment {
  double t0 = 0.0, t1 = 0.0;
  Eigen::VectorXd velocity;
};

class VelocityHistory {
 public:
  VelocityHistory() = default;
  /// `initial` is the velocity for all t < 0.
  explicit VelocityHistory(Eigen::VectorXd initial) : initial_(std::move(initial)) {}

  void append(VelocitySegment s);
  /// Drops segments ending at or before `t`.
  void discard_before(double t);
  /// Time average of the velocity over [s0, s1] (s0 < s1).
  Eigen::VectorXd average(double s0, double s1) const;
  /// Integral of the lumped kinetic density |b|^2_M over [s0, s1].
  double squared_integral(const ReferenceMesh& m, double s0, double s1) const;
  const std::vector<VelocitySegment>& segments() const { return segments_; }
  const Eigen::VectorXd& initial() const { return initial_; }

 private:
  Eigen::VectorXd initial_;
  std::vector<VelocitySegment> segments_;
};

/// One accepted inner step. Energies are in energy units, momenta are
/// rho * sum_v m_v b_v.
struct LedgerRow {
  int step = 0;  // running index of accepted inner steps (0 = initial state)
  int interval = 0;
  double t = 0.0;
  double tau = 0.0;
  EnergyBreakdown energy;
  double dissipation2_cum = 0.0;  // 2 * sum tau R
  double kinetic = 0.0;           // rho/(2h) int_{t-h}^t |b|^2
  Vec2 momentum = Vec2::Zero();   // of the current step velocity b_k
  Vec2 zeta_momentum = Vec2::Zero();
  Vec2 impulse = Vec2::Zero();    // cumulative obstacle contact impulse
  double sigma_norm = 0.0;        // |sigma_k|
  double cn_deficit = 0.0;        // only on frames, else NaN
  double cn_tolerance = 0.0;
  double min_det = 0.0;
  double min_gap = 0.0;

  std::string status;
  double descent = 0.0;  // J_k(eta_k) - J_k(eta_{k-1})
  double energy_scale = 1.0;
  double force_scale = 1.0;
  double stationarity = 0.0;
  double complementarity = 0.0;
  double work_cum = 0.0;          // sum tau <f, b>
  double dissipation_step = 0.0;  // tau R
  double inertial_step = 0.0;     // rho tau/(2h) |b|^2
  double zeta_step = 0.0;         // rho tau/(2h) |zeta|^2
  double cross_step = 0.0;        // rho tau/h <zeta, b>
  Vec2 external_force = Vec2::Zero();  // sum_v m_v f_v
  Vec2 obstacle_force = Vec2::Zero();
  Vec2 self_force = Vec2::Zero();
  Vec2 dirichlet_force = Vec2::Zero();
  double momentum_residual = 0.0;
  double momentum_scale = 1.0;
  double global_slack = 0.0;  // main energy inequality, RHS - LHS
  double global_scale = 1.0;
  double sigma_l2_cum = 0.0;  // sum tau |sigma|^2
  int contacts = 0;
  int self_contacts = 0;
  int newton = 0;
  Vec2 com = Vec2::Zero();
  Vec2 com_velocity = Vec2::Zero();
};

/// Energy bookkeeping of one outer interval [t0, t1].
struct IntervalRow {
  int interval = 0;
  double t0 = 0.0, t1 = 0.0;
  /// E(end) + 2 int R + rho/(2h) int |b|^2  <=  E(start) + int <f,b> + rho/(2h) int |zeta|^2
  double lhs = 0.0, rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  /// Same chain without Young's inequality and with 1 * R (implied by per-step descent).
  double descent_slack = 0.0;
  double scale = 1.0;
  int substeps = 0;  // inner steps actually taken
};

struct Frame {
  int step = 0;
  double t = 0.0;
  Deformation eta;
};

struct FrameContacts {
  int step = 0;
  double t = 0.0;
  ContactForce force;
  Deformation eta;  // state the force acts on
};

struct SimulationRecord {
  std::vector<LedgerRow> ledger;
  std::vector<IntervalRow> intervals;
  std::vector<Frame> frames;
  std::vector<FrameContacts> contacts;
  int not_converged_steps = 0;
  int halvings = 0;
  bool completed = false;
  std::string failure;
  double runtime_seconds = 0.0;
};

struct StepperState {
  double t = 0.0;
  int interval = 0;  // completed outer intervals
  int step = 0;      // accepted inner steps
  Deformation eta;
  VelocityHistory history;
  double dissipation2_cum = 0.0;
  double work_cum = 0.0;
  double sigma_l2_cum = 0.0;
  Vec2 impulse = Vec2::Zero();
  double initial_energy = 0.0;  // E(eta0) + rho/2 |eta*|^2

  static StepperState initial(const Scenario& scn);
};

class StepperError : public std::runtime_error {
 public:
  StepperError(int interval, const std::string& what)
      : std::runtime_error("interval " + std::to_string(interval) + ": " + what), interval_(interval) {}
  int interval() const { return interval_; }

 private:
  int interval_;
};

/// Runs the M inner steps of the next outer interval, appending to `rec`.
/// Failed inner solves are retried with halved tau; a solve that is still
/// rejected at the halving limit throws StepperError.
void advance_outer_interval(const Scenario& scn, StepperState& state, SimulationRecord& rec);

/// Whole trajectory. `on_interval` (optional) is called after every interval.
/// On failure the partial record is returned with `completed == false`.
SimulationRecord run(const Scenario& scn,
                     const std::function<void(const StepperState&, const SimulationRecord&)>& on_interval = {});

/// |rho (P(b_k) - P(zeta_k)) / h - (F_ext + F_obs + F_dirichlet)| for one ledger row.
double momentum_identity_residual(const LedgerRow& row, double h);

/// Ledger row for the initial state (step 0).
LedgerRow initial_row(const Scenario& scn, const StepperState& state);

}  // namespace visco
