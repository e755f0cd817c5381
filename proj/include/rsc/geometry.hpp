#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "rsc/simplex.hpp"

namespace rsc {

enum class Metric { uniform, euclidean };

Metric metric_from_string(const std::string& name);
std::string metric_name(Metric m);

/**
 * The sampling domain: a d-torus of side a (wrap = true), or the plain
 * square/box [0, a]^d (wrap = false, used for figure-style runs). Distances
 * apply the per-coordinate wraparound min(|x-y|, a-|x-y|) only when wrapping.
 */
struct Domain {
    int dim = 2;
    double side = 1.0;
    Metric metric = Metric::uniform;
    bool wrap = true;

    double coord_delta(double x, double y) const;
    double distance(std::span<const double> x, std::span<const double> y) const;
};

struct PointConfiguration {
    Domain domain;
    std::vector<double> coords; // row-major, size() * domain.dim
    std::uint64_t seed = 0;

    std::size_t size() const {
        return domain.dim ? coords.size() / domain.dim : 0;
    }
    std::span<const double> point(std::size_t i) const {
        return {coords.data() + i * domain.dim, static_cast<std::size_t>(domain.dim)};
    }
    double distance(std::size_t i, std::size_t j) const {
        return domain.distance(point(i), point(j));
    }
    void append(std::span<const double> p) {
        coords.insert(coords.end(), p.begin(), p.end());
    }
};

/// Text point format:
///   points v1 d=<d> a=<a>[ mode=square]
/// followed by one point per line, space-separated coordinates.
void write_points(std::ostream& os, const PointConfiguration& cfg);
PointConfiguration read_points(std::istream& is);
void write_points_file(const std::string& path, const PointConfiguration& cfg);
PointConfiguration read_points_file(const std::string& path);

/// Appends a fixed perimeter grid of vertices (square mode, d = 2) with
/// spacing side/ceil(side/step); returns the ids of the added points.
std::vector<VertexId> add_boundary_grid(PointConfiguration& cfg, double step);

/// Ids of points inside (or on) the convex hull of the critical points,
/// for d <= 2. Critical ids are always kept.
std::vector<VertexId> hull_filter(const PointConfiguration& cfg,
                                  const std::vector<VertexId>& critical);

} // namespace rsc
