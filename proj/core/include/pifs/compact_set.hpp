#pragma once

#include <span>
#include <vector>

#include "pifs/point.hpp"

namespace pifs {

/// Exact 1-D closed interval backend, a <= b.
struct Interval1D {
  double a = 0.0;
  double b = 0.0;
};

/// A non-empty compact subset of a carrier: either a finite point set
/// (deduplicated at resolution `snap`) or an exact 1-D interval.
///
/// Snapping prunes points that share a grid cell of side `snap` (cells are
/// anchored at the origin); the kept representative is the lexicographically
/// smallest point of the cell, so results are order-independent. snap = 0
/// means exact-duplicate dedup only.
class CompactSet {
 public:
  static CompactSet points(std::vector<Point> pts, double snap = 0.0);
  static CompactSet interval(double a, double b);

  bool is_interval() const { return is_interval_; }
  const Interval1D& bounds() const;
  const std::vector<Point>& members() const;
  double snap() const { return snap_; }
  int dim() const;
  std::size_t size() const;

  /// Finite grid approximation of an interval (finite sets pass through,
  /// re-deduplicated at the given resolution).
  CompactSet rasterized(double snap) const;

  /// Union of finite sets, deduplicated at `snap`.
  static CompactSet union_of(std::span<const CompactSet> parts, double snap);

  friend bool operator==(const CompactSet& a, const CompactSet& b);

 private:
  CompactSet() = default;

  bool is_interval_ = false;
  Interval1D iv_{};
  std::vector<Point> pts_;  // sorted, deduplicated
  double snap_ = 0.0;
};

/// Sort + keep the lexicographically smallest point per snap cell.
std::vector<Point> snap_dedup(std::vector<Point> pts, double snap);

}  // namespace pifs
