#include "rsc/complex.hpp"

#include <algorithm>
#include <deque>

#include "rsc/errors.hpp"

namespace rsc {

namespace {
const SimplexSet kEmptySet;

bool dim_lex_less(const Simplex& a, const Simplex& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a < b;
}
} // namespace

void SimplicialComplex::check_cap(std::size_t additional) const {
    if (m_size + additional > m_cap)
        throw ResourceError("simplex count " + std::to_string(m_size + additional) +
                            " exceeds cap " + std::to_string(m_cap));
}

void SimplicialComplex::insert_raw(const Simplex& sigma) {
    if (sigma.empty()) throw ValidationError("cannot insert an empty simplex");
    const int d = sigma.dim();
    if (static_cast<int>(m_dims.size()) <= d) m_dims.resize(d + 1);
    if (contains(sigma)) return;
    check_cap(1);
    m_dims[d].insert(sigma);
    ++m_size;
    if (d >= 1)
        for (std::size_t i = 0; i < sigma.size(); ++i)
            m_cofaces[sigma.facet(i)].insert(sigma);
}

void SimplicialComplex::insert_closure(const Simplex& sigma) {
    const std::size_t nv = sigma.size();
    if (nv >= 60 || ((std::size_t{1} << nv) - 1) > m_cap)
        throw ResourceError("closure of a " + std::to_string(sigma.dim()) +
                            "-simplex exceeds cap " + std::to_string(m_cap));
    // enumerate missing faces by increasing size
    std::size_t missing = 0;
    std::vector<std::vector<Simplex>> by_size(nv + 1);
    for (std::size_t mask = 1; mask < (std::size_t{1} << nv); ++mask) {
        std::vector<VertexId> vs;
        for (std::size_t i = 0; i < nv; ++i)
            if (mask & (std::size_t{1} << i)) vs.push_back(sigma[i]);
        Simplex f(std::move(vs));
        if (!contains(f)) {
            ++missing;
            by_size[f.size()].push_back(std::move(f));
        }
    }
    check_cap(missing);
    for (std::size_t s = 1; s <= nv; ++s)
        for (const Simplex& f : by_size[s]) insert_raw(f);
}

bool SimplicialComplex::contains(const Simplex& s) const {
    const int d = s.dim();
    if (d < 0 || d >= static_cast<int>(m_dims.size())) return false;
    return m_dims[d].count(s) != 0;
}

bool SimplicialComplex::has_vertex(VertexId v) const {
    return contains(Simplex{v});
}

int SimplicialComplex::max_dim() const {
    for (int d = static_cast<int>(m_dims.size()) - 1; d >= 0; --d)
        if (!m_dims[d].empty()) return d;
    return -1;
}

std::size_t SimplicialComplex::count(int dim) const {
    if (dim < 0 || dim >= static_cast<int>(m_dims.size())) return 0;
    return m_dims[dim].size();
}

std::vector<std::size_t> SimplicialComplex::s_counts() const {
    std::vector<std::size_t> out;
    for (int d = 0; d <= max_dim(); ++d) out.push_back(count(d));
    return out;
}

const SimplexSet& SimplicialComplex::simplices(int dim) const {
    if (dim < 0 || dim >= static_cast<int>(m_dims.size())) return kEmptySet;
    return m_dims[dim];
}

std::vector<Simplex> SimplicialComplex::sorted_simplices(int dim) const {
    const SimplexSet& set = simplices(dim);
    std::vector<Simplex> out(set.begin(), set.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexId> SimplicialComplex::vertices() const {
    std::vector<VertexId> out;
    out.reserve(count(0));
    for (const Simplex& s : simplices(0)) out.push_back(s[0]);
    std::sort(out.begin(), out.end());
    return out;
}

const SimplexSet& SimplicialComplex::immediate_cofaces(const Simplex& sigma) const {
    auto it = m_cofaces.find(sigma);
    return it == m_cofaces.end() ? kEmptySet : it->second;
}

std::vector<Simplex> SimplicialComplex::cofaces_of(const Simplex& sigma,
                                                   int target_dim) const {
    if (!contains(sigma))
        throw NotFoundError("simplex " + sigma.str() + " not in complex");
    if (target_dim <= sigma.dim())
        throw ValidationError("coface dimension must exceed the simplex dimension");
    SimplexSet frontier{sigma};
    for (int d = sigma.dim(); d < target_dim; ++d) {
        SimplexSet next;
        for (const Simplex& s : frontier)
            for (const Simplex& c : immediate_cofaces(s)) next.insert(c);
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    std::vector<Simplex> out(frontier.begin(), frontier.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Simplex> SimplicialComplex::remove_vertex(VertexId v) {
    if (!has_vertex(v))
        throw NotFoundError("vertex " + std::to_string(v) + " not in complex");
    // gather v and everything above it
    SimplexSet doomed;
    std::deque<Simplex> queue{Simplex{v}};
    doomed.insert(Simplex{v});
    while (!queue.empty()) {
        Simplex s = std::move(queue.front());
        queue.pop_front();
        for (const Simplex& c : immediate_cofaces(s))
            if (doomed.insert(c).second) queue.push_back(c);
    }
    for (const Simplex& s : doomed) {
        m_dims[s.dim()].erase(s);
        m_cofaces.erase(s);
        --m_size;
    }
    for (const Simplex& s : doomed) {
        if (s.dim() < 1) continue;
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex f = s.facet(i);
            if (f.contains(v)) continue; // also removed
            auto it = m_cofaces.find(f);
            if (it != m_cofaces.end()) {
                it->second.erase(s);
                if (it->second.empty()) m_cofaces.erase(it);
            }
        }
    }
    std::vector<Simplex> out(doomed.begin(), doomed.end());
    std::sort(out.begin(), out.end(), dim_lex_less);
    return out;
}

void SimplicialComplex::restore(const std::vector<Simplex>& removed) {
    for (const Simplex& s : removed) insert_raw(s);
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
    std::vector<Simplex> out;
    for (const SimplexSet& dimset : m_dims)
        for (const Simplex& s : dimset)
            if (immediate_cofaces(s).empty()) out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace rsc
