#pragma once

#include <Eigen/Core>

#include "visco/mesh.hpp"

namespace visco {

/// Nodal field over a reference mesh, stored flat as (x0, y0, x1, y1, ...).
/// Used both for deformations and for velocity fields.
struct NodalField {
  MeshPtr mesh;
  Eigen::VectorXd values;

  NodalField() = default;
  NodalField(MeshPtr m, Eigen::VectorXd v);

  int num_vertices() const { return mesh->num_vertices(); }
  Vec2 at(int v) const { return values.segment<2>(2 * v); }
  auto at(int v) { return values.segment<2>(2 * v); }
};

/// Deformation eta: vertex -> R^2 (piecewise affine on triangles).
struct Deformation : NodalField {
  using NodalField::NodalField;

  /// eta = id + offset.
  static Deformation identity(MeshPtr m, Vec2 offset = Vec2::Zero());
  /// eta(x) = A x + c applied to every reference vertex.
  static Deformation affine(MeshPtr m, const Mat2& a, Vec2 c = Vec2::Zero());
};

/// Per-vertex velocity b.
struct VelocityField : NodalField {
  using NodalField::NodalField;

  static VelocityField zero(MeshPtr m);
  static VelocityField uniform(MeshPtr m, Vec2 v);
};

/// Constant gradient of the affine interpolant on triangle `tri`.
Mat2 deformation_gradient(const NodalField& def, int tri);

/// Jump of the deformation gradient across interior edge `edge`, divided by
/// the edge's length scale: (F_left - F_right) / l_e.
Mat2 hinge_second_difference(const NodalField& def, int edge);

/// Same, addressing the edge by its endpoints. Throws std::domain_error when
/// {a,b} is a boundary edge (or not an edge).
Mat2 hinge_second_difference(const NodalField& def, int a, int b);

/// Minimum over triangles of det F.
double min_determinant(const Deformation& def, int* argmin = nullptr);

/// Lumped L2 inner product  sum_v m_v u_v . w_v  with area-lumped weights.
double lumped_dot(const ReferenceMesh& m, const Eigen::VectorXd& u, const Eigen::VectorXd& w);

/// Integral of a nodal field: sum_v m_v u_v.
Vec2 lumped_integral(const ReferenceMesh& m, const Eigen::VectorXd& u);

/// Area-weighted centre of mass of the deformed configuration (lumped).
Vec2 center_of_mass(const Deformation& def);

}  // namespace visco
