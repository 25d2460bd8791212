#include "pifs/maps.hpp"

#include <algorithm>
#include <cmath>

#include "pifs/rng.hpp"

namespace pifs {

LipMap LipMap::affine1d(double alpha, double beta, std::optional<double> lip) {
  if (!std::isfinite(alpha) || !std::isfinite(beta))
    throw error("affine1d: coefficients must be finite");
  return LipMap(Affine1D{alpha, beta}, lip);
}

LipMap LipMap::quad1d(double alpha, std::optional<double> lip) {
  if (!std::isfinite(alpha)) throw error("quad1d: coefficient must be finite");
  return LipMap(Quad1D{alpha}, lip);
}

LipMap LipMap::affine2d(const std::array<double, 4>& m,
                        const std::array<double, 2>& v,
                        std::optional<double> lip) {
  for (double e : m)
    if (!std::isfinite(e)) throw error("affine2d: matrix must be finite");
  for (double e : v)
    if (!std::isfinite(e)) throw error("affine2d: shift must be finite");
  return LipMap(Affine2D{m, v}, lip);
}

LipMap LipMap::identity(int dim) {
  if (dim == 1) return affine1d(1.0, 0.0, 1.0);
  return affine2d({1, 0, 0, 1}, {0, 0}, 1.0);
}

LipMap LipMap::with_lip(double lip) const {
  if (!(lip >= 0.0)) throw error("declared Lipschitz constant must be >= 0");
  LipMap f = *this;
  f.lip_ = lip;
  return f;
}

LipMap LipMap::with_metric(std::string key) const {
  LipMap f = *this;
  f.metric_ = std::move(key);
  return f;
}

int LipMap::dim() const {
  struct V {
    int operator()(const Affine1D&) const { return 1; }
    int operator()(const Quad1D&) const { return 1; }
    int operator()(const Affine2D&) const { return 2; }
    int operator()(const Composed& c) const { return c.parts.front().dim(); }
  };
  return std::visit(V{}, form_);
}

Point LipMap::operator()(const Point& x) const {
  struct V {
    const Point& x;
    Point operator()(const Affine1D& f) const {
      return Point::d1(f.alpha * x[0] + f.beta);
    }
    Point operator()(const Quad1D& f) const {
      return Point::d1(f.alpha * x[0] * x[0]);
    }
    Point operator()(const Affine2D& f) const {
      return Point::d2(f.m[0] * x[0] + f.m[1] * x[1] + f.v[0],
                       f.m[2] * x[0] + f.m[3] * x[1] + f.v[1]);
    }
    Point operator()(const Composed& c) const {
      Point p = x;
      for (auto it = c.parts.rbegin(); it != c.parts.rend(); ++it) p = (*it)(p);
      return p;
    }
  };
  if (x.dim() != dim()) throw error("apply: point dimension mismatch");
  return std::visit(V{x}, form_);
}

Interval1D LipMap::map_interval(const Interval1D& domain) const {
  struct V {
    const Interval1D& d;
    Interval1D operator()(const Affine1D& f) const {
      const double u = f.alpha * d.a + f.beta;
      const double v = f.alpha * d.b + f.beta;
      return {std::min(u, v), std::max(u, v)};
    }
    Interval1D operator()(const Quad1D& f) const {
      const double u = f.alpha * d.a * d.a;
      const double v = f.alpha * d.b * d.b;
      double lo = std::min(u, v), hi = std::max(u, v);
      if (d.a < 0.0 && d.b > 0.0) {  // x^2 attains 0 inside
        lo = std::min(lo, 0.0);
        hi = std::max(hi, 0.0);
      }
      return {lo, hi};
    }
    Interval1D operator()(const Affine2D&) const {
      throw error("map_interval: 2-D form has no interval image");
    }
    Interval1D operator()(const Composed& c) const {
      Interval1D iv = d;
      for (auto it = c.parts.rbegin(); it != c.parts.rend(); ++it)
        iv = it->map_interval(iv);
      return iv;
    }
  };
  return std::visit(V{domain}, form_);
}

Point apply(const LipMap& f, const PartialMetric& space, const Point& x) {
  if (!space.carrier().contains(x))
    throw error("apply: point outside carrier " + space.carrier().describe());
  const Point y = f(x);
  if (!space.carrier().contains(y))
    throw error("apply: image escapes carrier " + space.carrier().describe());
  return y;
}

LipMap compose(const LipMap& f, const LipMap& g) {
  if (f.dim() != g.dim()) throw error("compose: dimension mismatch");
  if (!f.metric_.empty() && !g.metric_.empty() && f.metric_ != g.metric_)
    throw error("compose: maps bound to different metrics ('" + f.metric_ +
                "' vs '" + g.metric_ + "')");
  Composed c;
  if (const auto* cf = std::get_if<Composed>(&f.form())) c.parts = cf->parts;
  else c.parts.push_back(f);
  if (const auto* cg = std::get_if<Composed>(&g.form()))
    c.parts.insert(c.parts.end(), cg->parts.begin(), cg->parts.end());
  else c.parts.push_back(g);

  std::optional<double> lip;
  if (f.lip_ && g.lip_) lip = *f.lip_ * *g.lip_;
  LipMap h{LipMap::Form{std::move(c)}, lip};
  h.metric_ = f.metric_.empty() ? g.metric_ : f.metric_;
  return h;
}

bool is_self_map(const LipMap& f, const Carrier& carrier, double eps) {
  if (f.dim() != carrier.dim) return false;
  if (carrier.dim == 1) {
    const Interval1D img = f.map_interval({carrier.lo[0], carrier.hi[0]});
    return img.a >= carrier.lo[0] - eps && img.b <= carrier.hi[0] + eps;
  }
  // Affine images of a box are spanned by corner images; quadratic 2-D forms
  // do not exist, and compositions of affine forms stay affine.
  const std::array<Point, 4> corners = {
      Point::d2(carrier.lo[0], carrier.lo[1]),
      Point::d2(carrier.lo[0], carrier.hi[1]),
      Point::d2(carrier.hi[0], carrier.lo[1]),
      Point::d2(carrier.hi[0], carrier.hi[1])};
  for (const auto& c : corners)
    if (!carrier.contains(f(c), eps)) return false;
  return true;
}

namespace {

std::vector<Point> estimate_grid(const Carrier& c) {
  std::vector<Point> g;
  if (c.dim == 1) {
    const int n = 32;
    g.reserve(n + 1);
    for (int i = 0; i <= n; ++i)
      g.push_back(Point::d1(c.lo[0] + (c.hi[0] - c.lo[0]) * i / n));
  } else {
    const int n = 8;
    g.reserve((n + 1) * (n + 1));
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        g.push_back(Point::d2(c.lo[0] + (c.hi[0] - c.lo[0]) * i / n,
                              c.lo[1] + (c.hi[1] - c.lo[1]) * j / n));
  }
  return g;
}

}  // namespace

double lipschitz_estimate(const LipMap& f, const PartialMetric& space,
                          int n_samples) {
  if (n_samples < 2) throw error("lipschitz_estimate: n_samples must be >= 2");
  const Carrier& c = space.carrier();
  if (f.dim() != c.dim) throw error("lipschitz_estimate: dimension mismatch");

  double best = -1.0;
  const auto consider = [&](const Point& x, const Point& y) {
    const double pxy = space.unchecked(x, y);
    if (pxy <= 0.0) return;
    best = std::max(best, space.unchecked(f(x), f(y)) / pxy);
  };

  const std::vector<Point> grid = estimate_grid(c);
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = i + 1; j < grid.size(); ++j)
      consider(grid[i], grid[j]);

  Rng rng(0x5ca1ab1e);
  for (int s = 0; s < n_samples; ++s) consider(rng.point_in(c), rng.point_in(c));

  if (best < 0.0)
    throw error("lipschitz_estimate: all sampled pairs have p(x,y) = 0");
  return best;
}

const ClosureViolation& ClosureReport::first() const {
  if (violations.empty()) throw error("closure report: no violations");
  return violations.front();
}

namespace {

void enumerate_words(int alphabet, int max_len,
                     const std::function<void(const Word&)>& visit) {
  std::vector<int> letters;
  // Depth-first in lexicographic order: every prefix is visited before its
  // extensions, which matches length-then-lex enumeration per subtree.
  const std::function<void()> rec = [&] {
    if (!letters.empty()) visit(Word(letters, alphabet));
    if (static_cast<int>(letters.size()) == max_len) return;
    for (int l = 1; l <= alphabet; ++l) {
      letters.push_back(l);
      rec();
      letters.pop_back();
    }
  };
  rec();
}

LipMap compose_word(const std::vector<LipMap>& family, const Word& w) {
  LipMap m = family[static_cast<std::size_t>(w.letter(0) - 1)];
  for (std::size_t i = 1; i < w.length(); ++i)
    m = compose(m, family[static_cast<std::size_t>(w.letter(i) - 1)]);
  return m;
}

}  // namespace

ClosureReport semigroup_closure_check(const std::vector<LipMap>& family,
                                      const PartialMetric& space,
                                      const ClosurePredicate& predicate,
                                      int depth) {
  if (family.empty()) throw error("semigroup_closure_check: empty family");
  if (depth < 2) throw error("semigroup_closure_check: depth must be >= 2");

  ClosureReport rep;
  for (const auto& [w, m] : semigroup_words(family, depth)) {
    ++rep.words_checked;
    const double est = lipschitz_estimate(m, space, 64);
    const auto declared = m.declared_lip();

    bool ok = true;
    switch (predicate.kind) {
      case ClosurePredicate::Kind::lipschitz:
        // Bookkeeping products of finite constants stay finite; the estimate
        // refutes only if it exceeds the declared bound.
        ok = !declared || est <= *declared + 1e-9;
        break;
      case ClosurePredicate::Kind::contraction:
        ok = est < 1.0 + 1e-9 && (!declared || *declared < 1.0);
        break;
      case ClosurePredicate::Kind::fixed_lip:
        ok = std::abs(est - predicate.fixed) <= 1e-6;
        break;
    }
    if (!ok) {
      rep.closed = false;
      rep.violations.push_back({w, est, declared});
    }
  }
  return rep;
}

std::vector<std::pair<Word, LipMap>> semigroup_words(
    const std::vector<LipMap>& family, int max_len, std::size_t cap) {
  if (family.empty()) throw error("semigroup_words: empty family");
  if (max_len < 1) throw error("semigroup_words: max_len must be >= 1");

  const int n = static_cast<int>(family.size());
  std::size_t total = 0, pow = 1;
  for (int l = 1; l <= max_len; ++l) {
    pow *= static_cast<std::size_t>(n);
    total += pow;
    if (total > cap)
      throw error("semigroup_words: " + std::to_string(total) +
                  " elements exceed cap " + std::to_string(cap));
  }

  std::vector<std::pair<Word, LipMap>> out;
  out.reserve(total);
  enumerate_words(n, max_len, [&](const Word& w) {
    out.emplace_back(w, compose_word(family, w));
  });
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.first.length() < b.first.length();
  });
  return out;
}

}  // namespace pifs
