#pragma once

#include "pifs/compact_set.hpp"
#include "pifs/pmetric.hpp"

namespace pifs {

/// min over y in B of p(x,y). Interval backends use the closed forms of the
/// max and euclid rules; finite backends take the exact minimum over members.
double point_to_set(const PartialMetric& space, const Point& x,
                    const CompactSet& B);

/// rho_p(A,B) = sup over x in A of point_to_set(x,B). Exact for every
/// supported backend combination (interval sups reduce to endpoint and
/// midpoint candidates).
double directed_distance(const PartialMetric& space, const CompactSet& A,
                         const CompactSet& B);

/// h_p(A,B) = max{rho_p(A,B), rho_p(B,A)}. May be positive for A == B.
double hausdorff_partial(const PartialMetric& space, const CompactSet& A,
                         const CompactSet& B);

/// sup over x,y in A (including x = y) of p(x,y).
double diameter(const PartialMetric& space, const CompactSet& A);

/// Every member (or both endpoints) inside the space's carrier, matching
/// dimension; interval backends only where the rule has closed forms.
void validate_set(const PartialMetric& space, const CompactSet& A);

}  // namespace pifs
