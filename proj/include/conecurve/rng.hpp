#pragma once

#include "conecurve/geometry.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>

namespace conecurve {

/// SplitMix64 stream. Used instead of <random> engines so that draws are
/// bit-identical across standard libraries and platforms.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in the open interval (0,1).
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53 + 0x1.0p-54;
  }
};

/// Independent substream for one sample index: seed plus index fully
/// determine every draw, so sampling is reproducible and order-free.
inline SplitMix64 stream_at(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(SplitMix64::mix(seed ^ SplitMix64::mix(index + 0x632BE59BD9B4E019ULL)));
}

/// Standard normal pair by Box-Muller.
inline void normal_pair(SplitMix64& rng, double& z0, double& z1) {
  const double u1 = rng.next_double();
  const double u2 = rng.next_double();
  const double r = std::sqrt(-2.0 * std::log(u1));
  z0 = r * std::cos(2.0 * std::numbers::pi * u2);
  z1 = r * std::sin(2.0 * std::numbers::pi * u2);
}

/// Uniform direction on S^{n-1}.
inline Vec sample_sphere(SplitMix64& rng, int n) {
  Vec v(n);
  for (int i = 0; i < n; i += 2) {
    double z0, z1;
    normal_pair(rng, z0, z1);
    v(i) = z0;
    if (i + 1 < n) v(i + 1) = z1;
  }
  double nrm = v.norm();
  while (nrm < 1e-12) { // astronomically unlikely; redraw to stay safe
    for (int i = 0; i < n; ++i) v(i) = rng.next_double() - 0.5;
    nrm = v.norm();
  }
  return v / nrm;
}

} // namespace conecurve
