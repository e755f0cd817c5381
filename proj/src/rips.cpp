#include "rsc/rips.hpp"

#include <algorithm>
#include <cmath>

#include "rsc/errors.hpp"

namespace rsc {

double theta_of(const Domain& domain, double epsilon) {
    return std::pow(epsilon / domain.side, domain.dim);
}

double epsilon_of_theta(const Domain& domain, double theta) {
    return domain.side * std::pow(theta, 1.0 / domain.dim);
}

namespace {

struct CliqueCollector {
    const std::vector<std::vector<std::uint32_t>>& upper; // index into ids
    const std::vector<VertexId>& ids;
    std::size_t cap;
    std::optional<int> dim_cap;
    std::vector<std::vector<Simplex>> by_size; // [s] -> cliques of s vertices
    std::size_t total = 0;

    void emit(const std::vector<VertexId>& verts) {
        if (++total > cap)
            throw ResourceError("simplex count " + std::to_string(total) +
                                " exceeds cap " + std::to_string(cap));
        if (by_size.size() < verts.size() + 1) by_size.resize(verts.size() + 1);
        by_size[verts.size()].push_back(Simplex(verts));
    }

    void expand(std::vector<VertexId>& verts, const std::vector<std::uint32_t>& cands) {
        if (dim_cap && static_cast<int>(verts.size()) >= *dim_cap + 1) return;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            const std::uint32_t c = cands[i];
            verts.push_back(ids[c]);
            emit(verts);
            std::vector<std::uint32_t> next;
            for (std::size_t j = i + 1; j < cands.size(); ++j)
                if (std::binary_search(upper[c].begin(), upper[c].end(), cands[j]))
                    next.push_back(cands[j]);
            if (!next.empty()) expand(verts, next);
            verts.pop_back();
        }
    }
};

} // namespace

SimplicialComplex rips_complex(const PointConfiguration& cfg, const RipsParams& params,
                               const std::vector<VertexId>& keep) {
    std::vector<VertexId> ids(keep);
    std::sort(ids.begin(), ids.end());
    for (VertexId v : ids)
        if (v >= cfg.size())
            throw ValidationError("point index " + std::to_string(v) + " out of range");

    const std::size_t n = ids.size();
    std::vector<std::vector<std::uint32_t>> upper(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (cfg.distance(ids[i], ids[j]) < params.epsilon)
                upper[i].push_back(static_cast<std::uint32_t>(j));

    CliqueCollector col{upper, ids, params.simplex_cap, params.max_dim_cap, {}, 0};
    std::vector<VertexId> verts;
    // anchored expansion: each clique is found once, at its smallest vertex
    for (std::size_t i = 0; i < n; ++i) {
        verts.push_back(ids[i]);
        col.emit(verts);
        if (!upper[i].empty()) col.expand(verts, upper[i]);
        verts.pop_back();
    }

    SimplicialComplex cx(params.simplex_cap);
    for (const auto& size_group : col.by_size)
        for (const Simplex& s : size_group) cx.insert_raw(s);
    return cx;
}

SimplicialComplex rips_complex(const PointConfiguration& cfg, const RipsParams& params) {
    std::vector<VertexId> all(cfg.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<VertexId>(i);
    return rips_complex(cfg, params, all);
}

int max_box_clique(const PointConfiguration& cfg, double epsilon) {
    if (cfg.domain.metric != Metric::uniform)
        throw ValidationError("box clique scan requires the uniform metric");
    const std::size_t n = cfg.size();
    if (n == 0) return 0;
    if (epsilon <= 0) return 1;
    const double a = cfg.domain.side;
    const int d = cfg.domain.dim;
    if (cfg.domain.wrap && 2 * epsilon > a) return static_cast<int>(n); // all pairs close

    int best = 1;
    std::vector<std::uint32_t> start(n);
    for (std::size_t i = 0; i < n; ++i) start[i] = static_cast<std::uint32_t>(i);

    auto delta = [&](double xj, double xi) {
        double t = xj - xi;
        if (cfg.domain.wrap) {
            t = std::fmod(t, a);
            if (t < 0) t += a;
        }
        return t;
    };

    // anchor an open epsilon-window per coordinate at each candidate point
    auto rec = [&](auto&& self, int dim, const std::vector<std::uint32_t>& cand) -> void {
        if (dim == d) {
            best = std::max(best, static_cast<int>(cand.size()));
            return;
        }
        if (static_cast<int>(cand.size()) <= best) return;
        for (std::uint32_t anchor : cand) {
            const double x0 = cfg.point(anchor)[dim];
            std::vector<std::uint32_t> sel;
            for (std::uint32_t j : cand) {
                const double t = delta(cfg.point(j)[dim], x0);
                if (t >= 0 && t < epsilon) sel.push_back(j);
            }
            if (static_cast<int>(sel.size()) > best || dim + 1 < d)
                self(self, dim + 1, sel);
        }
    };
    rec(rec, 0, start);
    return best;
}

} // namespace rsc
