#pragma once

#include "conecurve/geometry.hpp"

#include <cstdint>
#include <vector>

namespace conecurve {

/// A pointed, full-dimensional polyhedral cone, carried in both
/// representations:
///   V-rep: unit extreme rays w_j with C = cone{w_j},
///   H-rep: unit facet normals a_k with C = {x : <a_k,x> >= 0 for all k}.
/// Construction canonicalizes: vectors are unit-normalized, duplicates and
/// non-extreme generators dropped, facets recovered from (n-1)-subsets of
/// generators, and both lists sorted lexicographically. Instances are
/// immutable and safe to share across threads.
class PointedCone {
public:
  static PointedCone from_generators(std::vector<Vec> generators);

  /// As above, but also validates a user-supplied facet list against the
  /// computed one (same set up to order/sign conventions).
  static PointedCone from_generators_and_facets(std::vector<Vec> generators,
                                                const std::vector<Vec>& facets);

  int dim() const { return dim_; }
  const std::vector<Vec>& generators() const { return generators_; }
  const std::vector<Vec>& facet_normals() const { return facet_normals_; }

  /// Membership test; strict uses the interior margin eps_int = 1e-9
  /// (scale-invariant in |x|).
  bool contains(const Vec& x, bool strict) const;

  /// Strictly interior unit direction (normalized generator sum).
  Vec axis() const;

private:
  PointedCone() = default;
  int dim_ = 0;
  std::vector<Vec> generators_;
  std::vector<Vec> facet_normals_;
};

/// Polar dual C° = {x : <x,y> <= 0 for all y in C}; its generators are the
/// negated facet normals of C and vice versa.
PointedCone dual_cone(const PointedCone& c);

/// Spherical cap polygon S^{n-1} ∩ cl(C) for n = 3; vertices are the
/// cone's extreme rays in counterclockwise order around the axis.
SphericalPolygon cap_polygon(const PointedCone& c);

/// Exact (n = 3) area of Omega_C by Gauss-Bonnet angle excess.
double cap_area_exact(const PointedCone& c);

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
};

/// Monte Carlo cap area for any dimension: acceptance fraction of uniform
/// sphere samples times the sphere's surface measure.
McEstimate cap_area_mc(const PointedCone& c, long samples, std::uint64_t seed);

/// The cap Omega_C with its cached area (exact for n = 3, Monte Carlo
/// with 10^6 samples otherwise).
struct SphericalCap {
  PointedCone cone;
  double area = 0.0;
  SphericalPolygon polygon; // empty unless n == 3
};

SphericalCap make_cap(const PointedCone& c);

/// Uniform i.i.d. samples on Omega_C by rejection from the sphere;
/// deterministic per (seed, index). Fails with a diagnostic if the
/// acceptance rate drops below 1e-4.
std::vector<Vec> sample_cap(const PointedCone& c, long count, std::uint64_t seed);

/// Surface measure of S^{n-1}.
double sphere_area(int n);

} // namespace conecurve
