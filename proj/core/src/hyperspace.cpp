#include "pifs/hyperspace.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "pifs/error.hpp"

namespace pifs {

namespace {

using Rule = PartialMetric::Rule;

bool interval_supported(Rule r) { return r == Rule::max || r == Rule::euclid; }

double dist_to_interval(double x, const Interval1D& iv) {
  if (x < iv.a) return iv.a - x;
  if (x > iv.b) return x - iv.b;
  return 0.0;
}

// min over y in [a,b] of p(x,y) for the closed-form rules.
double point_to_interval(const PartialMetric& space, const Point& x,
                         const Interval1D& iv) {
  switch (space.rule()) {
    case Rule::max:
      return std::max(x[0], iv.a);
    case Rule::euclid:
      return dist_to_interval(x[0], iv);
    default:
      throw error("interval backend unsupported for metric '" + space.name() +
                  "'");
  }
}

double min_coord(const std::vector<Point>& pts) {
  double m = pts.front()[0];
  for (const auto& p : pts) m = std::min(m, p[0]);
  return m;
}

// sup over x in [a,b] of min_j |x - y_j|; attained at an endpoint or at a
// midpoint of consecutive members.
double interval_to_finite_euclid(const Interval1D& iv,
                                 const std::vector<Point>& ys) {
  std::vector<double> sorted;
  sorted.reserve(ys.size());
  for (const auto& p : ys) sorted.push_back(p[0]);
  std::sort(sorted.begin(), sorted.end());

  const auto d = [&sorted](double x) {
    double m = std::abs(x - sorted.front());
    for (double y : sorted) m = std::min(m, std::abs(x - y));
    return m;
  };

  double best = std::max(d(iv.a), d(iv.b));
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    const double mid = 0.5 * (sorted[i] + sorted[i + 1]);
    if (mid > iv.a && mid < iv.b) best = std::max(best, d(mid));
  }
  return best;
}

}  // namespace

void validate_set(const PartialMetric& space, const CompactSet& A) {
  const Carrier& c = space.carrier();
  if (A.is_interval()) {
    if (c.dim != 1)
      throw error("interval backend requires a 1-D carrier");
    if (!interval_supported(space.rule()))
      throw error("interval backend unsupported for metric '" + space.name() +
                  "'");
    const auto& iv = A.bounds();
    if (!c.contains(Point::d1(iv.a)) || !c.contains(Point::d1(iv.b)))
      throw error("interval endpoints outside carrier " + c.describe());
    return;
  }
  if (A.dim() != c.dim)
    throw error("point set dimension does not match carrier");
  for (const auto& p : A.members())
    if (!c.contains(p))
      throw error("point set member outside carrier " + c.describe());
}

double point_to_set(const PartialMetric& space, const Point& x,
                    const CompactSet& B) {
  validate_set(space, B);
  if (B.is_interval()) {
    space(x, x);  // carrier/dimension check for x
    return point_to_interval(space, x, B.bounds());
  }
  space(x, B.members().front());
  double m = space.unchecked(x, B.members().front());
  for (const auto& y : B.members()) m = std::min(m, space.unchecked(x, y));
  return m;
}

double directed_distance(const PartialMetric& space, const CompactSet& A,
                         const CompactSet& B) {
  validate_set(space, A);
  validate_set(space, B);

  if (!A.is_interval()) {
    // sup over members; point_to_set revalidates, use the kernels directly.
    if (B.is_interval()) {
      double best = 0.0;
      bool first = true;
      for (const auto& x : A.members()) {
        const double d = point_to_interval(space, x, B.bounds());
        best = first ? d : std::max(best, d);
        first = false;
      }
      return best;
    }
    const auto& bs = B.members();
    double best = 0.0;
    bool first = true;
    for (const auto& x : A.members()) {
      double m = space.unchecked(x, bs.front());
      for (const auto& y : bs) m = std::min(m, space.unchecked(x, y));
      best = first ? m : std::max(best, m);
      first = false;
    }
    return best;
  }

  const auto& ia = A.bounds();
  if (B.is_interval()) {
    const auto& ib = B.bounds();
    if (space.rule() == Rule::max) return std::max(ia.b, ib.a);
    // euclid: dist(x, [a,b]) is convex in x, sup at an endpoint.
    return std::max(dist_to_interval(ia.a, ib), dist_to_interval(ia.b, ib));
  }
  if (space.rule() == Rule::max) return std::max(ia.b, min_coord(B.members()));
  return interval_to_finite_euclid(ia, B.members());
}

double hausdorff_partial(const PartialMetric& space, const CompactSet& A,
                         const CompactSet& B) {
  return std::max(directed_distance(space, A, B),
                  directed_distance(space, B, A));
}

double diameter(const PartialMetric& space, const CompactSet& A) {
  validate_set(space, A);
  if (A.is_interval()) {
    const auto& iv = A.bounds();
    if (space.rule() == Rule::max) return iv.b;
    return iv.b - iv.a;  // euclid
  }
  const auto& pts = A.members();
  double best = 0.0;
  bool first = true;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i; j < pts.size(); ++j) {
      const double d = space.unchecked(pts[i], pts[j]);
      best = first ? d : std::max(best, d);
      first = false;
    }
  }
  return best;
}

}  // namespace pifs
