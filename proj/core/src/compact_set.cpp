#include "pifs/compact_set.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "pifs/error.hpp"

namespace pifs {

namespace {

struct CellKey {
  std::int64_t cx = 0;
  std::int64_t cy = 0;
  friend auto operator<=>(const CellKey&, const CellKey&) = default;
};

CellKey cell_of(const Point& p, double snap) {
  CellKey k;
  k.cx = static_cast<std::int64_t>(std::floor(p[0] / snap));
  if (p.dim() == 2) k.cy = static_cast<std::int64_t>(std::floor(p[1] / snap));
  return k;
}

}  // namespace

std::vector<Point> snap_dedup(std::vector<Point> pts, double snap) {
  if (pts.empty()) return pts;
  const int dim = pts.front().dim();
  for (const auto& p : pts)
    if (p.dim() != dim) throw error("point set: mixed dimensions");

  if (snap <= 0.0) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
  }

  std::vector<std::pair<CellKey, Point>> keyed;
  keyed.reserve(pts.size());
  for (const auto& p : pts) keyed.emplace_back(cell_of(p, snap), p);
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first < b.first;
              return a.second < b.second;
            });
  std::vector<Point> out;
  out.reserve(keyed.size());
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i == 0 || keyed[i].first != keyed[i - 1].first)
      out.push_back(keyed[i].second);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CompactSet CompactSet::points(std::vector<Point> pts, double snap) {
  if (pts.empty()) throw error("CompactSet: point set must be non-empty");
  CompactSet s;
  s.is_interval_ = false;
  s.snap_ = snap;
  s.pts_ = snap_dedup(std::move(pts), snap);
  return s;
}

CompactSet CompactSet::interval(double a, double b) {
  if (!(a <= b)) throw error("CompactSet: interval requires a <= b");
  CompactSet s;
  s.is_interval_ = true;
  s.iv_ = {a, b};
  return s;
}

const Interval1D& CompactSet::bounds() const {
  if (!is_interval_) throw error("CompactSet: not an interval backend");
  return iv_;
}

const std::vector<Point>& CompactSet::members() const {
  if (is_interval_) throw error("CompactSet: not a finite backend");
  return pts_;
}

int CompactSet::dim() const { return is_interval_ ? 1 : pts_.front().dim(); }

std::size_t CompactSet::size() const {
  if (is_interval_) throw error("CompactSet: interval backend has no point count");
  return pts_.size();
}

CompactSet CompactSet::rasterized(double snap) const {
  if (!is_interval_) {
    return points(pts_, snap);
  }
  if (!(snap > 0.0)) throw error("rasterized: requires snap > 0");
  std::vector<Point> pts;
  const double a = iv_.a, b = iv_.b;
  const auto n = static_cast<std::size_t>(std::floor((b - a) / snap));
  pts.reserve(n + 2);
  for (std::size_t i = 0; i <= n; ++i) pts.push_back(Point::d1(a + snap * static_cast<double>(i)));
  if (pts.back()[0] < b) pts.push_back(Point::d1(b));
  return points(std::move(pts), 0.0);
}

CompactSet CompactSet::union_of(std::span<const CompactSet> parts, double snap) {
  if (parts.empty()) throw error("union_of: no parts");
  std::vector<Point> all;
  for (const auto& s : parts) {
    if (s.is_interval()) throw error("union_of: rasterize intervals first");
    all.insert(all.end(), s.members().begin(), s.members().end());
  }
  return points(std::move(all), snap);
}

bool operator==(const CompactSet& a, const CompactSet& b) {
  if (a.is_interval_ != b.is_interval_) return false;
  if (a.is_interval_) return a.iv_.a == b.iv_.a && a.iv_.b == b.iv_.b;
  return a.pts_ == b.pts_;
}

}  // namespace pifs
