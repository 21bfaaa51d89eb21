#pragma once

#include <Eigen/Dense>

#include <vector>

namespace conecurve {

using Vec = Eigen::VectorXd;
using Vec3 = Eigen::Vector3d;
using Mat = Eigen::MatrixXd;

// Numerical tolerances shared across the geometry stack.
namespace tol {
inline constexpr double interior_margin = 1e-9;    // strict-containment margin
inline constexpr double representation = 1e-12;    // representation consistency checks
inline constexpr double unit_length = 1e-9;        // accepted deviation of input unit vectors
inline constexpr double direction_distinct = 1e-8; // minimal angular separation of directions
inline constexpr double vertex_merge = 1e-10;      // sliver merge ahead of angle-excess area
inline constexpr double degenerate = 1e-14;        // generic degeneracy cutoff
} // namespace tol

/// Angle between two nonzero vectors, atan2-based (stable near 0 and pi).
double angle_between(const Vec3& a, const Vec3& b);

/// Solid angle of the spherical triangle (a,b,c), via Oosterom-Strackee.
/// Signed: positive when (a,b,c) wind counterclockwise seen from outside.
double spherical_triangle_area_signed(const Vec3& a, const Vec3& b, const Vec3& c);

/// Unsigned spherical triangle area.
double spherical_triangle_area(const Vec3& a, const Vec3& b, const Vec3& c);

/// A geodesically convex polygon on the unit sphere, contained in an open
/// hemisphere. Vertices are unit vectors in counterclockwise order when
/// seen from outside the sphere along the interior axis.
class SphericalPolygon {
public:
  SphericalPolygon() = default;
  explicit SphericalPolygon(std::vector<Vec3> vertices);

  bool empty() const { return verts_.size() < 3; }
  const std::vector<Vec3>& vertices() const { return verts_; }

  /// Area by Gauss-Bonnet angle excess: sum of interior angles minus
  /// (k-2)*pi. Vertices closer than tol::vertex_merge are merged first.
  double area() const;

  /// Intersect with the closed hemisphere {v : <c,v> >= 0}. Returns true
  /// if the polygon changed.
  bool clip(const Vec3& c);

  /// Point inside the polygon (edge margin in normalized-plane distance).
  bool contains(const Vec3& v, double margin = 0.0) const;

  /// Normalized vertex sum; interior point for nonempty convex polygons.
  Vec3 axis_point() const;

private:
  std::vector<Vec3> verts_;
};

} // namespace conecurve
