#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "visco/deformation.hpp"

namespace visco {

/// Parameters of the energy-dissipation pair
///
///   E(eta) = int mu |F^T F - I|^2 + c1 W(det F) + c2 |grad^2 eta|^p dx,
///   W(J)   = J^-a + a J - (1 + a),
///   R(eta, b) = viscosity * int |grad b^T F + F^T grad b|^2 dx.
///
/// The elastic tensor is mu times the identity on symmetric matrices.
struct MaterialParams {
  double mu = 1.0;
  double c1 = 0.1;
  double a = 16.0;
  double c2 = 1e-3;
  double p = 4.0;
  double rho = 1.0;
  double viscosity = 1.0;

  /// Throws std::invalid_argument if a weight or exponent is out of range.
  void validate() const;
  /// a > p n / (p - n), n = 2. Below it injectivity is not guaranteed; callers
  /// treat this as a warning.
  double injectivity_threshold() const { return 2.0 * p / (p - 2.0); }
  bool meets_injectivity_threshold() const { return a > injectivity_threshold(); }
};

struct EnergyBreakdown {
  double elastic = 0.0;
  double barrier = 0.0;
  double second_gradient = 0.0;
  double total = 0.0;
  /// Set when some triangle has det F <= 0; `total` is then +inf.
  std::optional<int> infeasible_triangle;

  bool feasible() const { return !infeasible_triangle.has_value(); }
};

/// Normalised volumetric barrier W(J) and its first two derivatives.
double barrier_density(double det, double a);
double barrier_derivative(double det, double a);
double barrier_second_derivative(double det, double a);

EnergyBreakdown elastic_energy(const Deformation& def, const MaterialParams& mp);

/// Exact gradient of the discrete energy w.r.t. nodal positions (flat 2N).
/// Throws std::domain_error on an infeasible deformation.
Eigen::VectorXd elastic_gradient(const Deformation& def, const MaterialParams& mp);

/// Hessian of the discrete energy as triplets (flat dof indices), scaled by
/// `scale`. Per-element blocks are projected onto the PSD cone when
/// `project` is set; the hinge blocks are convex and never need it.
void elastic_hessian(const Deformation& def, const MaterialParams& mp,
                     std::vector<Eigen::Triplet<double>>& out, double scale = 1.0,
                     bool project = true);

double dissipation(const Deformation& def, const VelocityField& vel, const MaterialParams& mp);

/// D_2 R(eta, b) as a flat covector.
Eigen::VectorXd dissipation_gradient(const Deformation& def, const VelocityField& vel,
                                     const MaterialParams& mp);

/// Matrix Q of the quadratic form R(eta, b) = b^T Q b. Triplets of `scale * 2Q`
/// (the Hessian in b) are appended to `out`.
void dissipation_hessian(const Deformation& def, const MaterialParams& mp,
                         std::vector<Eigen::Triplet<double>>& out, double scale = 1.0);

/// Korn-type constant of the discrete space: the smallest K with
///   K ||b||^2_{W^{1,2}} <= ||b||^2_{L^2} + R(eta, b)
/// over all nodal b (dense generalized eigenproblem; small meshes only).
double korn_constant(const Deformation& def, const MaterialParams& mp);

}  // namespace visco
