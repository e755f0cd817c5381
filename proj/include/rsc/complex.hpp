#pragma once

#include <cstddef>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "rsc/simplex.hpp"

namespace rsc {

using SimplexSet = std::unordered_set<Simplex, SimplexHash>;

/**
 * A face-closed abstract simplicial complex with explicit storage of every
 * simplex, per-dimension sets, and an immediate-coface index.
 *
 * Mutations keep three invariants: face closure, per-dimension counts equal
 * to set sizes, and the coface index listing exactly the stored immediate
 * cofaces of each simplex. Instances are single-writer; reads are safe to
 * share after construction.
 */
class SimplicialComplex {
public:
    static constexpr std::size_t kDefaultSimplexCap = std::size_t{1} << 24;

    explicit SimplicialComplex(std::size_t simplex_cap = kDefaultSimplexCap)
        : m_cap(simplex_cap) {}

    /// Inserts sigma together with every face of it. Idempotent.
    /// Throws ResourceError if the insertion would exceed the simplex cap.
    void insert_closure(const Simplex& sigma);

    /// Inserts sigma assuming all of its facets are already present.
    void insert_raw(const Simplex& sigma);

    /// Removes v and every simplex containing it. Returns the removed
    /// simplices sorted by (dimension, lexicographic), suitable for restore().
    /// Throws NotFoundError for an unknown vertex.
    std::vector<Simplex> remove_vertex(VertexId v);

    /// Re-inserts simplices previously returned by remove_vertex().
    void restore(const std::vector<Simplex>& removed);

    bool contains(const Simplex& s) const;
    bool has_vertex(VertexId v) const;

    /// -1 for the empty complex.
    int max_dim() const;

    /// Size in vertices of the largest stored simplex; 0 for the empty
    /// complex. Equals the graph clique number for clique complexes.
    int clique_number() const { return max_dim() + 1; }

    std::size_t size() const { return m_size; }
    std::size_t count(int dim) const;
    std::vector<std::size_t> s_counts() const;
    std::size_t vertex_count() const { return count(0); }

    const SimplexSet& simplices(int dim) const;
    std::vector<Simplex> sorted_simplices(int dim) const;
    std::vector<VertexId> vertices() const;

    /// Immediate (dimension + 1) cofaces; empty set if sigma has none.
    const SimplexSet& immediate_cofaces(const Simplex& sigma) const;

    /// Stored cofaces of the given dimension, lexicographically sorted.
    /// Throws NotFoundError if sigma is absent, ValidationError if
    /// target_dim <= dim(sigma).
    std::vector<Simplex> cofaces_of(const Simplex& sigma, int target_dim) const;

    /// Simplices with no coface, sorted by (dimension, lexicographic).
    std::vector<Simplex> maximal_simplices() const;

    std::size_t simplex_cap() const { return m_cap; }
    void set_simplex_cap(std::size_t cap) { m_cap = cap; }

    bool operator==(const SimplicialComplex& o) const { return m_dims == o.m_dims; }

private:
    void check_cap(std::size_t additional) const;

    std::vector<SimplexSet> m_dims;
    std::unordered_map<Simplex, SimplexSet, SimplexHash> m_cofaces;
    std::size_t m_size = 0;
    std::size_t m_cap;
};

} // namespace rsc
