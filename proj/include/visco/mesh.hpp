#pragma once

#include <array>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace visco {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

/// Directed boundary edge `a -> b` with the body on its left.
struct BoundaryEdge {
  int a = -1;
  int b = -1;
  int triangle = -1;
};

/// Edge shared by two triangles. `left`/`right` name the two triangles; the
/// hinge difference is F(left) - F(right).
struct InteriorEdge {
  int a = -1;
  int b = -1;
  int left = -1;
  int right = -1;
  double length_scale = 0.0;  // mean altitude of the two triangles over the edge
  double weight = 0.0;        // (A_left + A_right) / 3
};

/// Triangulated reference configuration, possibly made of several bodies.
///
/// Construction validates the invariants (positive orientation, manifold
/// edges, closed boundary loops) and precomputes every reference-only
/// quantity the energies and the contact code need.
class ReferenceMesh {
 public:
  ReferenceMesh(std::vector<Vec2> vertices,
                std::vector<std::array<int, 3>> triangles,
                std::vector<int> dirichlet_vertices = {});

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_triangles() const { return static_cast<int>(triangles_.size()); }
  int num_components() const { return num_components_; }

  const std::vector<Vec2>& vertices() const { return vertices_; }
  const Vec2& vertex(int v) const { return vertices_[v]; }
  const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
  const std::array<int, 3>& triangle(int t) const { return triangles_[t]; }

  const std::vector<BoundaryEdge>& boundary_edges() const { return boundary_edges_; }
  const std::vector<InteriorEdge>& interior_edges() const { return interior_edges_; }
  /// Boundary loops as cyclic sequences of boundary-edge ids.
  const std::vector<std::vector<int>>& boundary_loops() const { return loops_; }

  const std::vector<int>& triangle_component() const { return tri_component_; }
  int vertex_component(int v) const { return vertex_component_[v]; }
  const std::vector<int>& dirichlet_vertices() const { return dirichlet_; }
  bool is_pinned(int v) const { return pinned_[v] != 0; }

  double area(int t) const { return areas_[t]; }
  double total_area() const { return total_area_; }
  /// Reference gradients of the three P1 shape functions of triangle t.
  const std::array<Vec2, 3>& shape_gradients(int t) const { return grads_[t]; }
  /// Area-lumped mass weight of a vertex (area units, density excluded).
  double lumped_area(int v) const { return lumped_[v]; }
  const std::vector<double>& lumped_areas() const { return lumped_; }

  bool is_boundary_vertex(int v) const { return out_edge_[v] >= 0; }
  /// Boundary edge leaving / entering v (-1 for interior vertices).
  int outgoing_boundary_edge(int v) const { return out_edge_[v]; }
  int incoming_boundary_edge(int v) const { return in_edge_[v]; }
  /// Loop id and position within the loop of a boundary edge.
  int edge_loop(int e) const { return edge_loop_[e]; }
  int edge_loop_position(int e) const { return edge_loop_pos_[e]; }
  std::vector<int> boundary_vertices() const;

  /// Vertex adjacency (undirected edges of the triangulation).
  const std::vector<std::vector<int>>& neighbors() const { return neighbors_; }

  double min_edge_length() const { return min_edge_; }
  double max_edge_length() const { return max_edge_; }

  /// Finds the interior edge {a,b}; returns -1 if {a,b} is a boundary edge or
  /// not an edge at all.
  int find_interior_edge(int a, int b) const;

 private:
  void build();

  std::vector<Vec2> vertices_;
  std::vector<std::array<int, 3>> triangles_;
  std::vector<int> dirichlet_;
  std::vector<char> pinned_;

  std::vector<double> areas_;
  std::vector<std::array<Vec2, 3>> grads_;
  std::vector<double> lumped_;
  double total_area_ = 0.0;

  std::vector<BoundaryEdge> boundary_edges_;
  std::vector<InteriorEdge> interior_edges_;
  std::vector<std::vector<int>> loops_;
  std::vector<int> edge_loop_, edge_loop_pos_;
  std::vector<int> out_edge_, in_edge_;
  std::vector<int> tri_component_, vertex_component_;
  int num_components_ = 0;
  std::vector<std::vector<int>> neighbors_;
  double min_edge_ = 0.0, max_edge_ = 0.0;
};

using MeshPtr = std::shared_ptr<const ReferenceMesh>;

namespace mesh {

/// Disc of the given radius built from `rings` concentric rings (ring k holds
/// 6k vertices), 1 + 3 rings (rings + 1) vertices in total.
ReferenceMesh disc(double radius, int rings, Vec2 center = Vec2::Zero());

/// Axis-aligned rectangle [0,w] x [0,h] (shifted by `origin`) split into
/// nx*ny cells, each cut along the same diagonal.
ReferenceMesh rectangle(double width, double height, int nx, int ny,
                        Vec2 origin = Vec2::Zero());

/// Annular sector r in [r_in, r_out], angle in [theta0, theta1] (radians).
ReferenceMesh annulus_sector(double r_in, double r_out, double theta0,
                             double theta1, int n_radial, int n_angular,
                             Vec2 center = Vec2::Zero());

/// Disjoint union of meshes; each input keeps its own component(s).
ReferenceMesh compose(const std::vector<ReferenceMesh>& parts);

/// Same mesh with a new set of Dirichlet vertices.
ReferenceMesh with_dirichlet(const ReferenceMesh& m, std::vector<int> pinned);

/// Vertices whose reference coordinate along `axis` is within `tol` of the
/// extreme value (max if `upper`, min otherwise).
std::vector<int> extreme_vertices(const ReferenceMesh& m, int axis, bool upper,
                                  double tol = 1e-9);

void write(std::ostream& os, const ReferenceMesh& m);
ReferenceMesh read(std::istream& is);
void write_file(const std::string& path, const ReferenceMesh& m);
ReferenceMesh read_file(const std::string& path);

}  // namespace mesh
}  // namespace visco
