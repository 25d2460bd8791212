#pragma once

#include <cstdint>

#include "pifs/point.hpp"

namespace pifs {

/// Deterministic 64-bit generator (splitmix64). Output is identical across
/// platforms and standard-library versions, which keeps sampled sweeps and
/// the CSV artifacts they produce byte-stable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0x9e3779b97f4a7c15ull) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0,1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo,hi).
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  /// Uniform integer in [0,n).
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

  Point point_in(const Carrier& c) {
    if (c.dim == 1) return Point::d1(uniform(c.lo[0], c.hi[0]));
    return Point::d2(uniform(c.lo[0], c.hi[0]), uniform(c.lo[1], c.hi[1]));
  }

 private:
  std::uint64_t state_;
};

}  // namespace pifs
