#include "pifs/pmetric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace pifs {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double euclid_dist(const Point& x, const Point& y) {
  if (x.dim() == 1) return std::abs(x[0] - y[0]);
  return std::hypot(x[0] - y[0], x[1] - y[1]);
}

}  // namespace

PartialMetric::PartialMetric(Rule rule, Carrier carrier, double offset,
                             std::string name)
    : rule_(rule), carrier_(carrier), offset_(offset), name_(std::move(name)) {}

PartialMetric PartialMetric::max_metric(Carrier carrier) {
  if (carrier.dim != 1 || carrier.lo[0] < 0.0)
    throw error("max metric: carrier must be a 1-D box of non-negative reals");
  return PartialMetric(Rule::max, carrier, 0.0, "max");
}

PartialMetric PartialMetric::euclid(Carrier carrier) {
  return PartialMetric(Rule::euclid, carrier, 0.0, "euclid");
}

PartialMetric PartialMetric::shifted_euclid(Carrier carrier, double c) {
  if (!(c >= 0.0)) throw error("shifted euclid: offset c must be >= 0");
  return PartialMetric(Rule::shifted_euclid, carrier, c,
                       "shifted:" + fmt(c));
}

PartialMetric PartialMetric::broken_min_for_tests(Carrier carrier) {
  if (carrier.dim != 1 || carrier.lo[0] < 0.0)
    throw error("broken min rule: carrier must be a 1-D box of non-negative reals");
  return PartialMetric(Rule::broken_min, carrier, 0.0, "broken-min");
}

void PartialMetric::check_point(const Point& p) const {
  if (p.dim() != carrier_.dim)
    throw error("metric '" + name_ + "': point dimension " +
                std::to_string(p.dim()) + " does not match carrier dimension " +
                std::to_string(carrier_.dim));
  if (!carrier_.contains(p))
    throw error("metric '" + name_ + "': point (" + fmt(p[0]) +
                (p.dim() == 2 ? "," + fmt(p[1]) : "") + ") outside carrier " +
                carrier_.describe());
}

double PartialMetric::operator()(const Point& x, const Point& y) const {
  check_point(x);
  check_point(y);
  return unchecked(x, y);
}

double PartialMetric::unchecked(const Point& x, const Point& y) const {
  switch (rule_) {
    case Rule::max:
      return std::max(x[0], y[0]);
    case Rule::euclid:
      return euclid_dist(x, y);
    case Rule::shifted_euclid:
      return euclid_dist(x, y) + offset_;
    case Rule::broken_min:
      return std::min(x[0], y[0]);
  }
  throw error("unreachable metric rule");
}

bool PartialMetric::continuity_probe(const Point& a, const Point& x1,
                                     const Point& x2) const {
  const double lhs = std::abs((*this)(a, x1) - (*this)(a, x2));
  const double rhs =
      (*this)(x1, x2) - std::min(self(x1), self(x2));
  return lhs <= rhs + 1e-12;
}

std::string Carrier::describe() const {
  std::string s = "[" + fmt(lo[0]) + "," + fmt(hi[0]) + "]";
  if (dim == 2) s += "x[" + fmt(lo[1]) + "," + fmt(hi[1]) + "]";
  return s;
}

}  // namespace pifs
