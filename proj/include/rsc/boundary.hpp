#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "rsc/complex.hpp"

namespace rsc {

/**
 * Sparse column-major boundary matrix of dimension k: rows are the (k-1)-
 * simplices and columns the k-simplices, both in lexicographic order. The
 * column of [v_0,...,v_k] carries (-1)^i at the face dropping v_i, so each
 * column has exactly k+1 nonzeros.
 */
struct BoundaryMatrix {
    int k = 0;
    std::vector<Simplex> row_simplices;
    std::vector<Simplex> col_simplices;
    /// per column: (row index, sign) pairs, row-ascending
    std::vector<std::vector<std::pair<std::int32_t, std::int8_t>>> columns;

    std::size_t rows() const { return row_simplices.size(); }
    std::size_t cols() const { return col_simplices.size(); }

    /// Dense copy, for small matrices and tests.
    std::vector<std::vector<int>> dense() const;
};

/// Builds the boundary matrix of dimension k (1 <= k <= max_dim + 1; one past
/// the top dimension yields a matrix with no columns).
BoundaryMatrix boundary_matrix(const SimplicialComplex& cx, int k);

/// Coordinate-triplet text dump with a header naming the simplex orderings.
void write_boundary_triplets(std::ostream& os, const BoundaryMatrix& m);

} // namespace rsc
