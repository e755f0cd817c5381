#include "rsc/homology.hpp"

#include "rsc/boundary.hpp"
#include "rsc/errors.hpp"

namespace rsc {

BettiVector betti_numbers(const SimplicialComplex& cx, int k0, const FieldChoice& field) {
    if (k0 < 1) throw ValidationError("k0 must be >= 1");
    BettiVector out;
    out.field = field;
    out.values.assign(k0, 0);

    const int top = cx.max_dim();
    std::vector<long long> ranks(k0 + 1, 0); // ranks[k] = rank d_k, d_0 = 0
    for (int k = 1; k <= k0 && k <= top + 1; ++k)
        ranks[k] = rank(boundary_matrix(cx, k), field);

    for (int k = 0; k < k0; ++k) {
        const long long sk = static_cast<long long>(cx.count(k));
        out.values[k] = (sk - ranks[k]) - ranks[k + 1];
    }
    return out;
}

} // namespace rsc
