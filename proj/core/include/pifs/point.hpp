#pragma once

#include <array>
#include <cmath>
#include <compare>
#include <cstddef>
#include <string>

#include "pifs/error.hpp"

namespace pifs {

/// A point of a 1-D or 2-D carrier. Coordinates are always finite.
class Point {
 public:
  Point() : c_{0.0, 0.0}, dim_(1) {}

  static Point d1(double x) { return Point(x, 0.0, 1); }
  static Point d2(double x, double y) { return Point(x, y, 2); }

  int dim() const { return dim_; }
  double operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  double x() const { return c_[0]; }
  double y() const { return c_[1]; }

  friend bool operator==(const Point& a, const Point& b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_;
  }
  // Lexicographic order; used for canonical sorting and dedup tie-breaks.
  friend auto operator<=>(const Point& a, const Point& b) {
    if (auto c = a.c_[0] <=> b.c_[0]; c != 0) return c;
    return a.c_[1] <=> b.c_[1];
  }

 private:
  Point(double x, double y, int dim) : c_{x, y}, dim_(dim) {
    if (!std::isfinite(x) || (dim == 2 && !std::isfinite(y)))
      throw error("Point: coordinates must be finite");
  }

  std::array<double, 2> c_;
  int dim_;
};

/// Axis-aligned bounding box declaring the carrier of a metric instance.
struct Carrier {
  int dim = 1;
  std::array<double, 2> lo{0.0, 0.0};
  std::array<double, 2> hi{1.0, 1.0};

  static Carrier box1d(double lo, double hi);
  static Carrier box2d(double lo1, double hi1, double lo2, double hi2);

  /// Largest side length; the reference scale for snap defaults and slacks.
  double extent() const {
    double e = hi[0] - lo[0];
    if (dim == 2) e = std::max(e, hi[1] - lo[1]);
    return e;
  }

  bool contains(const Point& p, double eps = 1e-9) const {
    if (p.dim() != dim) return false;
    for (int i = 0; i < dim; ++i) {
      const auto k = static_cast<std::size_t>(i);
      if (p[i] < lo[k] - eps || p[i] > hi[k] + eps) return false;
    }
    return true;
  }

  Point center() const {
    if (dim == 1) return Point::d1(0.5 * (lo[0] + hi[0]));
    return Point::d2(0.5 * (lo[0] + hi[0]), 0.5 * (lo[1] + hi[1]));
  }

  std::string describe() const;
};

inline Carrier Carrier::box1d(double lo, double hi) {
  if (!(lo <= hi)) throw error("Carrier: requires lo <= hi");
  Carrier c;
  c.dim = 1;
  c.lo = {lo, 0.0};
  c.hi = {hi, 0.0};
  return c;
}

inline Carrier Carrier::box2d(double lo1, double hi1, double lo2, double hi2) {
  if (!(lo1 <= hi1) || !(lo2 <= hi2)) throw error("Carrier: requires lo <= hi");
  Carrier c;
  c.dim = 2;
  c.lo = {lo1, lo2};
  c.hi = {hi1, hi2};
  return c;
}

}  // namespace pifs
