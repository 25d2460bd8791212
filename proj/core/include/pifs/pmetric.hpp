#pragma once

#include <string>

#include "pifs/point.hpp"

namespace pifs {

/// A named partial-metric instance: a carrier box plus one of the bundled
/// distance rules. Self-distance p(x,x) may be non-zero; every rule satisfies
/// P1-P4 except the deliberately broken one used to exercise failure paths.
class PartialMetric {
 public:
  enum class Rule {
    max,             // p(x,y) = max(x,y) on the non-negative reals
    euclid,          // p(x,y) = |x-y| (a metric embedded as a partial metric)
    shifted_euclid,  // p(x,y) = |x-y| + c, constant self-distance c
    broken_min,      // p(x,y) = min(x,y); violates P1, test-only
  };

  static PartialMetric max_metric(Carrier carrier);
  static PartialMetric euclid(Carrier carrier);
  static PartialMetric shifted_euclid(Carrier carrier, double c);
  /// Not reachable from any config key; constructed directly by tests that
  /// exercise axiom-failure reporting.
  static PartialMetric broken_min_for_tests(Carrier carrier);

  Rule rule() const { return rule_; }
  const Carrier& carrier() const { return carrier_; }
  const std::string& name() const { return name_; }
  double offset() const { return offset_; }

  /// p(x,y). Throws on dimension mismatch or points outside the carrier.
  double operator()(const Point& x, const Point& y) const;
  double self(const Point& x) const { return (*this)(x, x); }

  /// p(x,y) without carrier checks; for kernels over pre-validated sets.
  double unchecked(const Point& x, const Point& y) const;

  /// |p(a,x1) - p(a,x2)| <= p(x1,x2) - min{p(x1,x1), p(x2,x2)} within 1e-12.
  /// The quantitative form of continuity of p(a, .).
  bool continuity_probe(const Point& a, const Point& x1, const Point& x2) const;

 private:
  PartialMetric(Rule rule, Carrier carrier, double offset, std::string name);
  void check_point(const Point& p) const;

  Rule rule_;
  Carrier carrier_;
  double offset_ = 0.0;
  std::string name_;
};

}  // namespace pifs
