#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "visco/contact.hpp"
#include "visco/material.hpp"

namespace visco {

struct SolverSettings {
  double tol_kkt = 1e-8;       // stationarity, relative to the force scale
  double tol_comp = 1e-8;      // max lambda_i g_i, relative to the energy scale
  double tol_descent = 1e-10;  // relative to the energy scale
  double mu0 = 1e-2;           // initial barrier weight, relative to the energy scale
  double mu_factor = 0.2;
  double tol_stage = 1e-6;     // stationarity of intermediate barrier stages, relative to the force scale
  double mu_min = 1e-10;
  int max_newton = 40;         // Newton iterations per barrier stage
  double kappa = 0.9;          // fraction-to-boundary
  double eps_act = 0.0;        // <= 0: 2% of the shortest reference edge
  int hops = 2;
  double atom_drop = 0.0;      // atoms at or below this fraction of the force scale are not listed

  void validate() const;
};

/// One minimizing-movement step
///
///   J(eta) = E(eta) + tau R(prev, (eta - prev)/tau) - tau <f, (eta - prev)/tau>
///
/// optionally with the inertial augmentation R~ = R + rho/(2h) |b|^2 and
/// f~ = f + rho zeta / h. Dirichlet vertices stay at their `previous` positions.
struct IncrementalProblem {
  Deformation previous;
  double tau = 0.0;
  MaterialParams material;
  /// Force density per unit reference area (nodal, flat); empty means zero.
  Eigen::VectorXd force;
  /// Inertial augmentation: active when h > 0.
  double h = 0.0;
  Eigen::VectorXd zeta;
  std::vector<Obstacle> obstacles;

  void validate() const;
  bool inertial() const { return h > 0.0; }
  /// Effective force density f~ (f plus the history term when inertial).
  Eigen::VectorXd effective_force() const;
  /// J at a deformation (+inf when infeasible).
  double objective(const Deformation& eta) const;
  /// Gradient of J at a feasible deformation (all dofs, pinned included).
  Eigen::VectorXd objective_gradient(const Deformation& eta) const;
  double energy_scale() const;
  double force_scale() const;
};

enum class StepStatus { Converged, NotConverged, Rejected };

const char* to_string(StepStatus s);

struct StepResult {
  StepStatus status = StepStatus::Rejected;
  std::string message;
  Deformation eta;
  ContactSet contacts;
  Eigen::VectorXd multipliers;  // one per contacts.constraints entry, >= 0
  ContactForce force;
  /// Reaction forces on pinned dofs (flat, zero elsewhere).
  Eigen::VectorXd dirichlet_reaction;

  double stationarity = 0.0;     // |DJ - sum lambda grad g|_inf on free dofs
  double complementarity = 0.0;  // max lambda_i g_i
  double min_gap = 0.0;          // +inf without constraints
  double min_det = 0.0;
  double objective_start = 0.0;  // J(previous) = E(previous)
  double objective_end = 0.0;    // J(eta)
  double energy_scale = 1.0;
  double force_scale = 1.0;
  EnergyBreakdown energy_before, energy_after;
  int newton_iterations = 0;
  int barrier_stages = 0;
};

/// Primal interior-point Newton method with log barriers on the activated gap
/// constraints and multipliers refined by nonnegative least squares on the
/// final stationarity condition. `warm_start` must be feasible.
StepResult solve_incremental(const IncrementalProblem& prob, const Deformation& warm_start,
                             const SolverSettings& settings = {});

/// Nonnegative least squares min |A x - b|, x >= 0 (Lawson-Hanson).
Eigen::VectorXd nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, int max_iter = 0);

struct QuasistaticStep {
  double t = 0.0;
  Deformation eta;
  ContactForce force;
  EnergyBreakdown energy;
  double dissipation = 0.0;  // tau R(eta_{k-1}, (eta_k - eta_{k-1})/tau)
  double work = 0.0;         // <f, eta_k - eta_{k-1}>
  double descent = 0.0;      // J(eta_k) - J(eta_{k-1})
  double sigma_l2 = 0.0;     // tau |sigma_k|^2
  StepStatus status = StepStatus::Converged;
};

struct QuasistaticTrajectory {
  std::vector<QuasistaticStep> steps;  // steps[0] is the initial state
  /// E(end) + sum tau R - E(start) - sum work: must be <= 0.
  double descent_slack = 0.0;
  /// Same with 2 tau R.
  double doubled_slack = 0.0;
  double sigma_l2 = 0.0;
  int subdivisions = 0;
};

/// M quasistatic steps of size h/M from eta0 under a constant force density.
/// Rejected steps are retried with halved tau (up to `max_halvings`).
QuasistaticTrajectory solve_quasistatic_interval(const Deformation& eta0, double h, int m, const MaterialParams& mp,
                                                 const Eigen::VectorXd& force, const std::vector<Obstacle>& obstacles,
                                                 const SolverSettings& settings = {}, int max_halvings = 8);

}  // namespace visco
