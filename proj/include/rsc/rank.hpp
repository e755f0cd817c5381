#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rsc/boundary.hpp"

namespace rsc {

/// Coefficient field for rank and Betti computations: exact rationals
/// (default) or a prime field GF(p).
struct FieldChoice {
    enum class Kind { rationals, prime };
    Kind kind = Kind::rationals;
    std::uint32_t p = 2;

    static FieldChoice rationals() { return {}; }
    static FieldChoice gf(std::uint32_t p);

    bool operator==(const FieldChoice& o) const {
        return kind == o.kind && (kind == Kind::rationals || p == o.p);
    }
    std::string str() const;
};

using SparseIntRow = std::vector<std::pair<std::int32_t, long long>>;

/// Exact rank of an integer matrix given as sparse rows (column-sorted),
/// over the chosen field. Deterministic pivoting; fraction-free
/// (integer-preserving) elimination in the rational case.
int sparse_rank(const std::vector<SparseIntRow>& rows, const FieldChoice& field);

int rank(const BoundaryMatrix& m, const FieldChoice& field);

} // namespace rsc
