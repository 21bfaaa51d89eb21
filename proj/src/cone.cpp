#include "conecurve/cone.hpp"

#include "conecurve/rng.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace conecurve {

namespace {

bool lex_less(const Vec& a, const Vec& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a(i) < b(i) - 1e-14) return true;
    if (a(i) > b(i) + 1e-14) return false;
  }
  return false;
}

void sort_lex(std::vector<Vec>& v) { std::sort(v.begin(), v.end(), lex_less); }

Mat as_matrix(const std::vector<Vec>& cols, int n) {
  Mat m(n, static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) m.col(static_cast<int>(j)) = cols[j];
  return m;
}

int matrix_rank(const Mat& m) {
  Eigen::FullPivLU<Mat> lu(m);
  lu.setThreshold(1e-10);
  return static_cast<int>(lu.rank());
}

// All facet-supporting hyperplanes through (n-1)-subsets of the generators.
std::vector<Vec> recover_facets(const std::vector<Vec>& gens, int n) {
  const int m = static_cast<int>(gens.size());
  std::vector<Vec> facets;
  std::vector<int> idx(n - 1);
  for (int i = 0; i < n - 1; ++i) idx[i] = i;
  auto advance = [&]() {
    int k = n - 2;
    while (k >= 0 && idx[k] == m - (n - 1) + k) --k;
    if (k < 0) return false;
    ++idx[k];
    for (int j = k + 1; j < n - 1; ++j) idx[j] = idx[j - 1] + 1;
    return true;
  };
  if (m < n - 1) return facets;
  do {
    Mat sub(n, n - 1);
    for (int i = 0; i < n - 1; ++i) sub.col(i) = gens[idx[i]];
    Eigen::FullPivLU<Mat> lu(sub.transpose());
    lu.setThreshold(1e-10);
    if (lu.rank() != n - 1) continue;
    Mat ker = lu.kernel();
    if (ker.cols() != 1) continue;
    Vec z = ker.col(0).normalized();
    double lo = 0.0, hi = 0.0;
    for (const Vec& w : gens) {
      const double s = z.dot(w);
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    Vec normal;
    if (lo >= -tol::representation)
      normal = z;
    else if (hi <= tol::representation)
      normal = -z;
    else
      continue; // not supporting
    bool dup = false;
    for (const Vec& f : facets) {
      if ((f - normal).norm() < 1e-10) {
        dup = true;
        break;
      }
    }
    if (!dup) facets.push_back(normal);
  } while (advance());
  return facets;
}

} // namespace

PointedCone PointedCone::from_generators(std::vector<Vec> generators) {
  if (generators.empty()) throw std::invalid_argument("cone.generators: empty");
  const int n = static_cast<int>(generators[0].size());
  if (n < 2) throw std::invalid_argument("cone.dim: must be >= 2");

  std::vector<Vec> gens;
  for (std::size_t j = 0; j < generators.size(); ++j) {
    Vec w = generators[j];
    if (static_cast<int>(w.size()) != n)
      throw std::invalid_argument("cone.generators: inconsistent dimensions");
    const double nrm = w.norm();
    if (nrm < tol::degenerate) {
      std::ostringstream os;
      os << "cone.generators[" << j << "]: zero vector";
      throw std::invalid_argument(os.str());
    }
    w /= nrm;
    bool dup = false;
    for (const Vec& g : gens) {
      if ((g - w).norm() < 1e-12) {
        dup = true;
        break;
      }
    }
    if (!dup) gens.push_back(std::move(w));
  }

  if (matrix_rank(as_matrix(gens, n)) != n)
    throw std::invalid_argument("cone.generators: not full-dimensional (rank deficient)");

  std::vector<Vec> facets = recover_facets(gens, n);
  if (facets.empty() || matrix_rank(as_matrix(facets, n)) != n)
    throw std::invalid_argument("cone: not pointed (C ∩ -C contains a line)");

  // Keep extreme rays only: a generator is extreme iff its active facets
  // span a space of dimension >= n-1.
  std::vector<Vec> extreme;
  for (const Vec& w : gens) {
    std::vector<Vec> active;
    for (const Vec& a : facets)
      if (std::abs(a.dot(w)) <= 1e-10) active.push_back(a);
    if (static_cast<int>(active.size()) >= n - 1 &&
        matrix_rank(as_matrix(active, n)) >= n - 1)
      extreme.push_back(w);
  }
  if (extreme.empty()) throw std::invalid_argument("cone.generators: no extreme rays found");

  // Representation consistency.
  for (const Vec& w : extreme)
    for (const Vec& a : facets)
      if (a.dot(w) < -tol::representation)
        throw std::logic_error("cone: generator violates recovered facet");

  sort_lex(extreme);
  sort_lex(facets);

  PointedCone c;
  c.dim_ = n;
  c.generators_ = std::move(extreme);
  c.facet_normals_ = std::move(facets);
  return c;
}

PointedCone PointedCone::from_generators_and_facets(std::vector<Vec> generators,
                                                    const std::vector<Vec>& facets) {
  PointedCone c = from_generators(std::move(generators));
  if (facets.size() != c.facet_normals_.size())
    throw std::invalid_argument("cone.facet_normals: count differs from recovered facets");
  for (std::size_t k = 0; k < facets.size(); ++k) {
    Vec a = facets[k];
    const double nrm = a.norm();
    if (nrm < tol::degenerate)
      throw std::invalid_argument("cone.facet_normals[" + std::to_string(k) + "]: zero vector");
    a /= nrm;
    bool found = false;
    for (const Vec& f : c.facet_normals_) {
      if ((f - a).norm() < 1e-9) {
        found = true;
        break;
      }
    }
    if (!found)
      throw std::invalid_argument("cone.facet_normals[" + std::to_string(k) +
                                  "]: not a facet of the generated cone");
  }
  return c;
}

bool PointedCone::contains(const Vec& x, bool strict) const {
  if (static_cast<int>(x.size()) != dim_)
    throw std::invalid_argument("contains: dimension mismatch");
  const double nrm = x.norm();
  if (nrm < tol::degenerate) return !strict;
  for (const Vec& a : facet_normals_) {
    const double s = a.dot(x);
    if (strict ? (s <= tol::interior_margin * nrm) : (s < -tol::representation * nrm)) return false;
  }
  return true;
}

Vec PointedCone::axis() const {
  Vec s = Vec::Zero(dim_);
  for (const Vec& w : generators_) s += w;
  return s / s.norm();
}

PointedCone dual_cone(const PointedCone& c) {
  std::vector<Vec> gens;
  gens.reserve(c.facet_normals().size());
  for (const Vec& a : c.facet_normals()) gens.push_back(-a);
  return PointedCone::from_generators(std::move(gens));
}

SphericalPolygon cap_polygon(const PointedCone& c) {
  if (c.dim() != 3) throw std::invalid_argument("cap_polygon: exact mode requires n = 3");
  const Vec d = c.axis();
  const Vec3 axis(d(0), d(1), d(2));
  // Tangent frame at the axis.
  Vec3 e1 = axis.cross(std::abs(axis.z()) < 0.9 ? Vec3::UnitZ() : Vec3::UnitX()).normalized();
  Vec3 e2 = axis.cross(e1);
  struct Entry {
    double angle;
    Vec3 v;
  };
  std::vector<Entry> entries;
  for (const Vec& w : c.generators()) {
    const Vec3 v(w(0), w(1), w(2));
    entries.push_back({std::atan2(e2.dot(v), e1.dot(v)), v});
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.angle < b.angle; });
  std::vector<Vec3> verts;
  verts.reserve(entries.size());
  for (const Entry& e : entries) verts.push_back(e.v);
  return SphericalPolygon(std::move(verts));
}

double cap_area_exact(const PointedCone& c) {
  if (c.dim() != 3) throw std::invalid_argument("cap_area: exact mode requires n = 3");
  return cap_polygon(c).area();
}

double sphere_area(int n) {
  // H^{n-1}(S^{n-1}) = 2 pi^{n/2} / Gamma(n/2)
  return 2.0 * std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n);
}

McEstimate cap_area_mc(const PointedCone& c, long samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("cap_area_mc: samples must be >= 1");
  long accepted = 0;
  for (long k = 0; k < samples; ++k) {
    SplitMix64 rng = stream_at(seed, static_cast<std::uint64_t>(k));
    if (c.contains(sample_sphere(rng, c.dim()), true)) ++accepted;
  }
  const double total = sphere_area(c.dim());
  const double p = static_cast<double>(accepted) / static_cast<double>(samples);
  McEstimate e;
  e.value = total * p;
  e.std_error = total * std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(samples));
  return e;
}

SphericalCap make_cap(const PointedCone& c) {
  SphericalCap cap;
  cap.cone = c;
  if (c.dim() == 3) {
    cap.polygon = cap_polygon(c);
    cap.area = cap.polygon.area();
  } else {
    cap.area = cap_area_mc(c, 1000000, 0).value;
  }
  if (!(cap.area > 0.0 && cap.area < sphere_area(c.dim())))
    throw std::logic_error("spherical cap: area outside (0, full sphere)");
  return cap;
}

std::vector<Vec> sample_cap(const PointedCone& c, long count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("sample_cap: count must be >= 1");
  std::vector<Vec> out;
  out.reserve(static_cast<std::size_t>(count));
  long proposals = 0;
  for (long k = 0; k < count; ++k) {
    SplitMix64 rng = stream_at(seed, static_cast<std::uint64_t>(k));
    for (;;) {
      ++proposals;
      Vec v = sample_sphere(rng, c.dim());
      if (c.contains(v, true)) {
        out.push_back(std::move(v));
        break;
      }
      if (proposals >= 100000 &&
          static_cast<double>(out.size() + 1) / static_cast<double>(proposals) < 1e-4) {
        std::ostringstream os;
        os << "sample_cap: acceptance rate below 1e-4 after " << proposals
           << " proposals (" << out.size() << " accepted); cone too thin for rejection sampling";
        throw std::runtime_error(os.str());
      }
    }
  }
  return out;
}

} // namespace conecurve
