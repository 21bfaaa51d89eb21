#include "conecurve/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace conecurve {

double angle_between(const Vec3& a, const Vec3& b) {
  return std::atan2(a.cross(b).norm(), a.dot(b));
}

double spherical_triangle_area_signed(const Vec3& a, const Vec3& b, const Vec3& c) {
  const double num = a.dot(b.cross(c));
  const double den = 1.0 + a.dot(b) + b.dot(c) + c.dot(a);
  return 2.0 * std::atan2(num, den);
}

double spherical_triangle_area(const Vec3& a, const Vec3& b, const Vec3& c) {
  return std::abs(spherical_triangle_area_signed(a, b, c));
}

SphericalPolygon::SphericalPolygon(std::vector<Vec3> vertices) : verts_(std::move(vertices)) {}

namespace {

std::vector<Vec3> merge_close_vertices(const std::vector<Vec3>& v, double eps) {
  std::vector<Vec3> out;
  out.reserve(v.size());
  for (const Vec3& p : v) {
    if (!out.empty() && (out.back() - p).norm() < eps) continue;
    out.push_back(p);
  }
  while (out.size() > 1 && (out.front() - out.back()).norm() < eps) out.pop_back();
  return out;
}

} // namespace

double SphericalPolygon::area() const {
  const std::vector<Vec3> v = merge_close_vertices(verts_, tol::vertex_merge);
  const std::size_t k = v.size();
  if (k < 3) return 0.0;
  double angle_sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const Vec3& prev = v[(i + k - 1) % k];
    const Vec3& cur = v[i];
    const Vec3& next = v[(i + 1) % k];
    // Interior angle between the geodesic tangents toward both neighbors.
    const Vec3 tp = (prev - prev.dot(cur) * cur).normalized();
    const Vec3 tn = (next - next.dot(cur) * cur).normalized();
    angle_sum += angle_between(tp, tn);
  }
  return angle_sum - static_cast<double>(k - 2) * std::numbers::pi;
}

bool SphericalPolygon::clip(const Vec3& c) {
  if (verts_.empty()) return false;
  const std::size_t k = verts_.size();
  std::vector<double> d(k);
  bool any_out = false, any_in = false;
  for (std::size_t i = 0; i < k; ++i) {
    d[i] = c.dot(verts_[i]);
    if (d[i] < -tol::degenerate) any_out = true;
    if (d[i] > tol::degenerate) any_in = true;
  }
  if (!any_out) return false;
  if (!any_in) {
    verts_.clear();
    return true;
  }
  std::vector<Vec3> out;
  out.reserve(k + 2);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = (i + 1) % k;
    const bool in_i = d[i] >= -tol::degenerate;
    const bool in_j = d[j] >= -tol::degenerate;
    if (in_i) out.push_back(verts_[i]);
    if (in_i != in_j) {
      // Chord crossing; the normalized point lies on both the arc and the
      // clipping great circle (the polygon sits in an open hemisphere, so
      // the chord never passes through the origin).
      const double t = d[i] / (d[i] - d[j]);
      Vec3 x = verts_[i] + t * (verts_[j] - verts_[i]);
      const double nrm = x.norm();
      if (nrm > tol::degenerate) out.push_back(x / nrm);
    }
  }
  verts_ = merge_close_vertices(out, tol::degenerate);
  if (verts_.size() < 3) verts_.clear();
  return true;
}

bool SphericalPolygon::contains(const Vec3& v, double margin) const {
  if (empty()) return false;
  const std::size_t k = verts_.size();
  for (std::size_t i = 0; i < k; ++i) {
    Vec3 n = verts_[i].cross(verts_[(i + 1) % k]);
    const double nn = n.norm();
    if (nn < tol::degenerate) continue;
    if (n.dot(v) / nn < -margin) return false;
  }
  return true;
}

Vec3 SphericalPolygon::axis_point() const {
  if (verts_.empty()) throw std::logic_error("axis_point of empty spherical polygon");
  Vec3 s = Vec3::Zero();
  for (const Vec3& v : verts_) s += v;
  const double n = s.norm();
  if (n < tol::degenerate) throw std::logic_error("degenerate spherical polygon axis");
  return s / n;
}

} // namespace conecurve
