#pragma once

#include <vector>

#include "rsc/complex.hpp"
#include "rsc/rank.hpp"

namespace rsc {

/// Betti numbers beta_0..beta_{k0-1} over the given field.
struct BettiVector {
    std::vector<long long> values;
    FieldChoice field;

    bool operator==(const BettiVector& o) const { return values == o.values; }
    bool operator!=(const BettiVector& o) const { return values != o.values; }
};

/**
 * beta_k = (s_k - rank d_k) - rank d_{k+1} for 0 <= k < k0, with d_0 the
 * zero map on vertices. The empty complex yields the all-zero vector.
 */
BettiVector betti_numbers(const SimplicialComplex& cx, int k0,
                          const FieldChoice& field = FieldChoice::rationals());

} // namespace rsc
