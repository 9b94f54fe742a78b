#pragma once

#include <optional>

#include "tcplan/algebra.hpp"

namespace tcplan::coh {

/// Certified zero-divisor cup-length: the longest product of zero-divisors
/// of homogeneous basis classes found nonzero. `factors` re-multiplied equal
/// `product` (in the tensor square of the searched algebra); for the
/// relative bound `mapped` holds the nonzero image. A value j certifies
/// TC > j, i.e. TC >= j + 1.
struct ZclResult {
    int length = 0;
    std::vector<std::string> witness;  // labels of the basis classes used
    std::vector<Element> factors;      // their zero-divisors
    Element product;                   // nonzero product of the factors
    std::optional<Element> mapped;     // image under i1* (x) i2*, when relative
};

/// Largest j such that some product of j zero-divisors of basis classes is
/// nonzero in tensor_square(a). Searches basis zero-divisors only, so the
/// value is a certified lower bound for the true cup-length, never an exact
/// claim. Witness tie-break: lexicographically smallest index sequence.
ZclResult zcl_lower_bound(const AlgebraPtr& a);

/// Largest j with a product of j basis zero-divisors of a_x whose image
/// under tensor_of_maps(i1, i2) is nonzero; certifies the relative bound
/// TC_X(Y1 x Y2) >= j + 1. Both maps must have source a_x.
ZclResult relative_zcl_lower_bound(const AlgebraPtr& a_x, const AlgebraMap& i1,
                                   const AlgebraMap& i2);

/// The degree-1-classes product test behind the 2n+1 bound for n disjoint
/// cycles: builds H*(Y^n) as the n-fold power, forms the 2n zero-divisors
/// of the slot classes gamma_j (beta_j in slot j) and gamma'_j (beta_{j+1},
/// subscripts cyclic, in slot j), and reports whether their full product is
/// nonzero in the tensor square. Requires the first n degree-1 classes of
/// a_y to have vanishing pairwise and self products.
bool graph_yn_product_check(int n, const AlgebraPtr& a_y);

}  // namespace tcplan::coh
