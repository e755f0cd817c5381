#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "rsc/errors.hpp"

namespace rsc {

using VertexId = std::uint32_t;

/**
 * An abstract simplex: a strictly increasing sequence of vertex ids.
 * The sorted form is the canonical representation, one per unordered set.
 * Dimension is (number of vertices - 1).
 */
class Simplex {
public:
    Simplex() = default;

    /// Canonicalizes (sorts) the given vertices. Throws ValidationError on
    /// duplicates or an empty vertex list.
    explicit Simplex(std::vector<VertexId> verts) : m_verts(std::move(verts)) {
        std::sort(m_verts.begin(), m_verts.end());
        if (m_verts.empty())
            throw ValidationError("simplex must have at least one vertex");
        if (std::adjacent_find(m_verts.begin(), m_verts.end()) != m_verts.end())
            throw ValidationError("simplex has repeated vertices");
    }

    Simplex(std::initializer_list<VertexId> verts)
        : Simplex(std::vector<VertexId>(verts)) {}

    int dim() const { return static_cast<int>(m_verts.size()) - 1; }
    std::size_t size() const { return m_verts.size(); }
    bool empty() const { return m_verts.empty(); }

    const std::vector<VertexId>& vertices() const { return m_verts; }
    VertexId operator[](std::size_t i) const { return m_verts[i]; }

    bool contains(VertexId v) const {
        return std::binary_search(m_verts.begin(), m_verts.end(), v);
    }

    /// The facet obtained by dropping the i-th (sorted) vertex.
    Simplex facet(std::size_t i) const {
        Simplex f;
        f.m_verts.reserve(m_verts.size() - 1);
        for (std::size_t j = 0; j < m_verts.size(); ++j)
            if (j != i) f.m_verts.push_back(m_verts[j]);
        return f;
    }

    /// All faces of a given dimension, in lexicographic order.
    std::vector<Simplex> faces_of_dim(int k) const;

    bool operator==(const Simplex& o) const { return m_verts == o.m_verts; }
    bool operator!=(const Simplex& o) const { return m_verts != o.m_verts; }
    bool operator<(const Simplex& o) const { return m_verts < o.m_verts; }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < m_verts.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(m_verts[i]);
        }
        return s + "]";
    }

private:
    std::vector<VertexId> m_verts;
};

inline std::vector<Simplex> Simplex::faces_of_dim(int k) const {
    std::vector<Simplex> out;
    const int n = static_cast<int>(m_verts.size());
    const int m = k + 1;
    if (m < 1 || m > n) return out;
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    while (true) {
        Simplex f;
        f.m_verts.reserve(m);
        for (int i : idx) f.m_verts.push_back(m_verts[i]);
        out.push_back(std::move(f));
        int i = m - 1;
        while (i >= 0 && idx[i] == n - m + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const {
        std::uint64_t h = 1469598103934665603ull;
        for (VertexId v : s.vertices()) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

inline std::ostream& operator<<(std::ostream& os, const Simplex& s) {
    return os << s.str();
}

} // namespace rsc
