#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pifs/compact_set.hpp"
#include "pifs/pmetric.hpp"
#include "pifs/word.hpp"

namespace pifs {

struct Affine1D {
  double alpha = 0.0;
  double beta = 0.0;
};

struct Quad1D {
  double alpha = 0.0;
};

struct Affine2D {
  std::array<double, 4> m{0, 0, 0, 0};  // row-major 2x2
  std::array<double, 2> v{0, 0};
};

class LipMap;

struct Composed {
  std::vector<LipMap> parts;  // outermost first: parts[0] applied last
};

/// A self-map of a carrier with an optionally declared Lipschitz constant
/// under a named partial metric. The declared constant is trusted
/// bookkeeping (exact product arithmetic under composition); sampled
/// estimates are lower bounds used to cross-check it.
class LipMap {
 public:
  using Form = std::variant<Affine1D, Quad1D, Affine2D, Composed>;

  static LipMap affine1d(double alpha, double beta,
                         std::optional<double> lip = {});
  static LipMap quad1d(double alpha, std::optional<double> lip = {});
  static LipMap affine2d(const std::array<double, 4>& m,
                         const std::array<double, 2>& v,
                         std::optional<double> lip = {});
  static LipMap identity(int dim);

  LipMap with_lip(double lip) const;
  LipMap with_metric(std::string key) const;

  const Form& form() const { return form_; }
  std::optional<double> declared_lip() const { return lip_; }
  const std::string& metric_key() const { return metric_; }
  int dim() const;

  /// Raw evaluation of the form; no carrier semantics.
  Point operator()(const Point& x) const;

  /// Exact image interval of a 1-D form (affine and quadratic pieces have
  /// closed-form ranges; compositions chain them).
  Interval1D map_interval(const Interval1D& domain) const;

 private:
  LipMap(Form f, std::optional<double> lip) : form_(std::move(f)), lip_(lip) {}

  Form form_;
  std::optional<double> lip_;
  std::string metric_;

  friend LipMap compose(const LipMap& f, const LipMap& g);
};

/// Checked evaluation: x and its image must lie in the space's carrier.
Point apply(const LipMap& f, const PartialMetric& space, const Point& x);

/// f after g, with declared_lip = lip(f) * lip(g) when both are known.
/// Throws when the maps are bound to different metric instances.
LipMap compose(const LipMap& f, const LipMap& g);

/// True when f maps the carrier into itself; exact for 1-D forms via
/// interval images, corner-exact for affine 2-D.
bool is_self_map(const LipMap& f, const Carrier& carrier, double eps = 1e-9);

/// Lower bound of Lip_p(f): max of p(f(x),f(y))/p(x,y) over a deterministic
/// carrier grid (which contains the extremal pairs of the bundled 1-D
/// families) plus n_samples random pairs. Image distances are evaluated with
/// the rule's formula even when images leave the carrier box.
double lipschitz_estimate(const LipMap& f, const PartialMetric& space,
                          int n_samples);

struct ClosurePredicate {
  enum class Kind { lipschitz, contraction, fixed_lip };
  Kind kind = Kind::contraction;
  double fixed = 0.0;

  static ClosurePredicate lipschitz() { return {Kind::lipschitz, 0.0}; }
  static ClosurePredicate contraction() { return {Kind::contraction, 0.0}; }
  static ClosurePredicate fixed_lip(double L) { return {Kind::fixed_lip, L}; }
};

struct ClosureViolation {
  Word word;                      // letters index the family, 1-based
  double estimate = 0.0;          // sampled lower bound for the composite
  std::optional<double> declared; // product bookkeeping, when known
};

struct ClosureReport {
  bool closed = true;
  std::size_t words_checked = 0;
  std::vector<ClosureViolation> violations;  // lexicographic word order
  const ClosureViolation& first() const;
};

/// Enumerates all compositions of the family up to the given word length
/// (letters 1..N, lexicographic order) and tests each against the
/// predicate. Word (w1,..,wm) denotes f_w1 o ... o f_wm.
ClosureReport semigroup_closure_check(const std::vector<LipMap>& family,
                                      const PartialMetric& space,
                                      const ClosurePredicate& predicate,
                                      int depth);

/// All words of length 1..max_len with their composed maps and product
/// bookkeeping; N + N^2 + ... + N^max_len elements, lexicographic order.
std::vector<std::pair<Word, LipMap>> semigroup_words(
    const std::vector<LipMap>& family, int max_len,
    std::size_t cap = 100000);

}  // namespace pifs
