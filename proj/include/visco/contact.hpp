#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "visco/deformation.hpp"
#include "visco/obstacle.hpp"

namespace visco {

/// Unit interior normal of the deformed body at a boundary vertex: the
/// deformed normals cof(F) n_Q of the two incident boundary edges, averaged
/// and normalized. Throws std::domain_error for a non-boundary vertex or a
/// degenerate image.
Vec2 interior_normal(const Deformation& def, int vertex);

/// Unit interior normal of the deformed boundary edge `edge`.
Vec2 edge_interior_normal(const Deformation& def, int edge);

struct AlmostNormal {
  Eigen::VectorXd field;  // flat per-vertex vectors, |n| <= 1
  int iterations = 0;
  bool fallback = false;  // smoothing broke the 1/2 condition; raw extension used
  double min_boundary_dot = 0.0;
};

/// Whole-domain vector field with |n| <= 1 everywhere and n . n_eta > 1/2 on
/// the boundary: boundary normals extended inward by nearest boundary vertex
/// (graph distance), then `smoothing_iterations` Jacobi averaging sweeps
/// (boundary vertices average with their two boundary neighbours only).
AlmostNormal almost_normal(const Deformation& def, int smoothing_iterations = 3);

enum class ConstraintKind { Obstacle, Self };

/// One scalar non-penetration constraint g >= 0.
///
/// Obstacle: g is the obstacle gap of the witness vertex.
/// Self: g is the signed distance of the witness from boundary edge `edge`
/// (positive outside the edge's body): the distance to the edge's line while
/// the projection parameter `s` lies in [0, 1], else the distance to the
/// nearer endpoint (s clamped). Its gradient is n on the witness and
/// -(1-s) n, -s n on the edge endpoints, so contributions sum to zero.
struct GapConstraint {
  ConstraintKind kind = ConstraintKind::Obstacle;
  int witness = -1;
  int obstacle = -1;
  int edge = -1;
  double s = 0.0;
  double gap = 0.0;
  /// Outward direction the gap grows along (obstacle normal, or the target
  /// edge's outward normal).
  Vec2 normal = Vec2::UnitX();
  int num_vertices = 1;
  std::array<int, 3> vertex{-1, -1, -1};
  std::array<Vec2, 3> gradient{};
  /// Curvature of the gap in the witness position (curved obstacles only).
  Mat2 witness_hessian = Mat2::Zero();

  double directional(const Eigen::VectorXd& phi) const;
};

/// Second derivative of g in the stacked positions of `vertex` (2 * num_vertices
/// rows in use); for obstacles it is `witness_hessian`.
Eigen::Matrix<double, 6, 6> gap_hessian(const GapConstraint& c, const Deformation& def);

/// Recomputes gap, projection, and gradient of `c` for deformation `def`.
void update_constraint(GapConstraint& c, const Deformation& def, const std::vector<Obstacle>& obstacles);

struct ContactOptions {
  double eps_act = 0.0;  // activation distance; <= 0 selects 2% of the shortest edge
  int hops = 2;          // same-loop edges within this many edges of the witness are skipped
};

double default_activation_distance(const ReferenceMesh& m);

struct ContactSet {
  double eps_act = 0.0;
  std::vector<GapConstraint> constraints;  // sorted by (kind, witness, obstacle, edge)

  bool empty() const { return constraints.empty(); }
  int count(ConstraintKind k) const;
  double min_gap() const;
};

/// All vertex-obstacle pairs and vertex-edge pairs (both orderings) with gap
/// <= eps_act, via a uniform-grid broad phase. Vertex-edge pairs require the
/// two normals to face each other. A pair beyond an edge end is listed only
/// for the edge that starts at that endpoint, and only if the witness lies in
/// the corner's normal wedge (beyond both incident edges). Of nearly collinear
/// neighbouring candidate edges only the better one is kept.
ContactSet detect_contacts(const Deformation& def, const std::vector<Obstacle>& obstacles,
                           const ContactOptions& opts = {});

/// True if two non-adjacent deformed boundary edges cross or a boundary
/// vertex lies strictly inside an obstacle.
bool has_penetration(const Deformation& def, const std::vector<Obstacle>& obstacles);

struct CiarletNecas {
  double integral_det = 0.0;  // sum of deformed triangle areas
  double deficit = 0.0;       // at resolution r
  double deficit_fine = 0.0;  // at resolution 2r
  double tolerance = 0.0;     // max(|deficit - deficit_fine|, cell area at r)
};

/// integral of det F minus the area of the union of deformed triangles, both
/// measured on an r x r raster over the deformed bounding box: overlapping
/// coverage counts cell_area * (count - 1) per cell. Shared edges follow a
/// consistent fill rule so an injective mesh has deficit exactly 0.
double ciarlet_necas_deficit(const Deformation& def, int resolution = 512);
CiarletNecas ciarlet_necas_check(const Deformation& def, int resolution = 512);

/// min over constraints of sum phi(z) . n_eta(z) over the contact partners
/// (witness normal, plus the target edge normal at the projection for self
/// contact). +inf when there are no constraints.
double tangent_cone_violation(const Deformation& def, const ContactSet& contacts, const Eigen::VectorXd& phi);

enum class AtomKind { Obstacle, SelfWitness, SelfTarget };

const char* to_string(AtomKind k);
AtomKind atom_kind_from_string(const std::string& s);

struct ContactAtom {
  int vertex = -1;
  double magnitude = 0.0;
  Vec2 direction = Vec2::Zero();
  AtomKind kind = AtomKind::Obstacle;
  int partner = -1;  // constraint index shared by all atoms of one multiplier
};

/// Contact force measure: one atom per (constraint, vertex) contribution
/// lambda_i * grad g_i restricted to that vertex.
struct ContactForce {
  std::vector<ContactAtom> atoms;
  /// Flat nodal sum of lambda_i grad g_i (all contributions, none dropped).
  Eigen::VectorXd nodal;
  Vec2 obstacle_total = Vec2::Zero();
  Vec2 self_total = Vec2::Zero();
  double norm = 0.0;  // sqrt(sum |nodal_v|^2)
};

/// Atoms with magnitude <= drop_below are omitted from `atoms` (they stay in
/// `nodal` and the totals).
ContactForce assemble_contact_force(const ReferenceMesh& m, const ContactSet& contacts,
                                    const Eigen::VectorXd& multipliers, double drop_below = 0.0);

void write_contact_header(std::ostream& os);
void write_contact_rows(std::ostream& os, double t, const ContactForce& f);

}  // namespace visco
