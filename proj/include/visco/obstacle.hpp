#pragma once

#include <string>
#include <vector>

#include "visco/mesh.hpp"

namespace visco {

/// Rigid convex region R^2 \ Omega that the bodies may not enter.
///
/// Half-plane: Omega = {x : (x - point) . normal > 0}.
/// Circle:     the obstacle is the closed disc |x - center| <= radius.
/// Polygon:    the obstacle is the convex hull of `vertices` (CCW order).
class Obstacle {
 public:
  enum class Kind { HalfPlane, Circle, Polygon };

  static Obstacle half_plane(Vec2 point, Vec2 normal);
  static Obstacle circle(Vec2 center, double radius);
  static Obstacle polygon(std::vector<Vec2> ccw_vertices);

  Kind kind() const { return kind_; }
  const Vec2& point() const { return point_; }
  const Vec2& normal() const { return normal_; }
  double radius() const { return radius_; }
  const std::vector<Vec2>& vertices() const { return vertices_; }

  /// "halfplane px py nx ny" / "circle cx cy r" / "polygon x0 y0 x1 y1 ...".
  std::string to_string() const;
  static Obstacle parse(const std::string& spec);

 private:
  Kind kind_ = Kind::HalfPlane;
  Vec2 point_ = Vec2::Zero();
  Vec2 normal_ = Vec2::UnitX();
  double radius_ = 0.0;
  std::vector<Vec2> vertices_;
};

struct ObstacleGap {
  double gap = 0.0;  // > 0 inside Omega, < 0 inside the obstacle
  Vec2 normal = Vec2::UnitX();  // unit gradient of the gap (points into Omega)
  /// Hessian of the gap w.r.t. the point (zero for flat pieces).
  Mat2 hessian = Mat2::Zero();
};

ObstacleGap obstacle_gap(const Obstacle& ob, const Vec2& p);

}  // namespace visco
