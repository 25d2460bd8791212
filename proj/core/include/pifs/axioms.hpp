#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pifs/pmetric.hpp"

namespace pifs {

/// A concrete inequality violation: which samples, both sides, and a label
/// naming the violated statement.
struct AxiomWitness {
  std::array<std::size_t, 3> indices{0, 0, 0};  // into the sample list
  double lhs = 0.0;
  double rhs = 0.0;
  std::string detail;
};

struct AxiomResult {
  bool passed = true;
  std::size_t checks = 0;
  std::optional<AxiomWitness> witness;

  void fail(AxiomWitness w) {
    if (passed) witness = std::move(w);
    passed = false;
  }
};

/// Pass/fail per axiom with the first witness found on failure.
/// P1: 0 <= p(x,x) <= p(x,y).  P2: indistancy implies equality.
/// P3: p(x,y) = p(y,x) exactly.  P4: p(x,z) <= p(x,y) + p(y,z) - p(y,y).
struct AxiomReport {
  AxiomResult p1, p2, p3, p4;
  bool all_passed() const {
    return p1.passed && p2.passed && p3.passed && p4.passed;
  }
};

namespace detail {

inline void check_pair_values(AxiomReport& rep, double pxx, double pyy,
                              double pxy, double pyx, std::size_t i,
                              std::size_t j, bool distinct, double tol) {
  ++rep.p1.checks;
  if (pxx < -tol || pxx > pxy + tol || pyy > pxy + tol) {
    rep.p1.fail({{i, j, j},
                 pxx > pxy + tol ? pxx : pyy,
                 pxy,
                 "P1: self-distance exceeds p(x,y) (or is negative)"});
  }

  ++rep.p3.checks;
  if (pxy != pyx) {
    rep.p3.fail({{i, j, j}, pxy, pyx, "P3: p(x,y) != p(y,x)"});
  }

  if (distinct) {
    ++rep.p2.checks;
    if (std::abs(pxx - pxy) <= tol && std::abs(pyy - pxy) <= tol) {
      rep.p2.fail({{i, j, j}, pxy, pxy,
                   "P2: p(x,x) = p(x,y) = p(y,y) for distinct points"});
    }
  }
}

// All three choices of the middle element of P4.
inline void check_triple_values(AxiomReport& rep, double pxy, double pyz,
                                double pxz, double pxx, double pyy, double pzz,
                                std::size_t i, std::size_t j, std::size_t k,
                                double tol) {
  rep.p4.checks += 3;
  if (pxz > pxy + pyz - pyy + tol)
    rep.p4.fail({{i, j, k}, pxz, pxy + pyz - pyy, "P4: middle y"});
  if (pxy > pxz + pyz - pzz + tol)
    rep.p4.fail({{i, k, j}, pxy, pxz + pyz - pzz, "P4: middle z"});
  if (pyz > pxy + pxz - pxx + tol)
    rep.p4.fail({{j, i, k}, pyz, pxy + pxz - pxx, "P4: middle x"});
}

}  // namespace detail

/// Exhaustive check of P1-P4 over every pair and every unordered triple of
/// `samples`. `p` is evaluated once per ordered pair into a matrix, so the
/// cubic triple sweep costs lookups only. `eq` decides sample identity for
/// P2. Cubic in the sample count: 1000 samples is ~1.7e8 triples.
template <class T, class P, class Eq = std::equal_to<T>>
AxiomReport verify_axioms(P&& p, std::span<const T> samples, double tol,
                          Eq eq = Eq{}) {
  if (samples.empty()) throw error("verify_axioms: empty sample list");
  const std::size_t n = samples.size();
  std::vector<double> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i * n + j] = p(samples[i], samples[j]);
  const auto d = [&m, n](std::size_t i, std::size_t j) { return m[i * n + j]; };

  AxiomReport rep;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      detail::check_pair_values(rep, d(i, i), d(j, j), d(i, j), d(j, i), i, j,
                                !eq(samples[i], samples[j]), tol);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        detail::check_triple_values(rep, d(i, j), d(j, k), d(i, k), d(i, i),
                                    d(j, j), d(k, k), i, j, k, tol);
  return rep;
}

/// Same checks driven by explicit sampled triples instead of the exhaustive
/// enumeration; each triple contributes its three pairs and all three P4
/// middle choices. Witness indices are (triple_index * 3 + slot).
template <class T, class P, class Eq = std::equal_to<T>>
AxiomReport verify_axioms_triples(P&& p,
                                  std::span<const std::array<T, 3>> triples,
                                  double tol, Eq eq = Eq{}) {
  if (triples.empty()) throw error("verify_axioms: empty triple list");
  AxiomReport rep;
  for (std::size_t t = 0; t < triples.size(); ++t) {
    const auto& [x, y, z] = triples[t];
    const std::size_t b = 3 * t;
    const double pxx = p(x, x), pyy = p(y, y), pzz = p(z, z);
    const double pxy = p(x, y), pxz = p(x, z), pyz = p(y, z);
    detail::check_pair_values(rep, pxx, pyy, pxy, p(y, x), b, b + 1, !eq(x, y),
                              tol);
    detail::check_pair_values(rep, pxx, pzz, pxz, p(z, x), b, b + 2, !eq(x, z),
                              tol);
    detail::check_pair_values(rep, pyy, pzz, pyz, p(z, y), b + 1, b + 2,
                              !eq(y, z), tol);
    detail::check_triple_values(rep, pxy, pyz, pxz, pxx, pyy, pzz, b, b + 1,
                                b + 2, tol);
  }
  return rep;
}

/// Convenience wrapper for the bundled real-coordinate instances.
inline AxiomReport verify_axioms(const PartialMetric& space,
                                 std::span<const Point> samples, double tol) {
  return verify_axioms<Point>(
      [&space](const Point& a, const Point& b) { return space(a, b); }, samples,
      tol);
}

}  // namespace pifs
