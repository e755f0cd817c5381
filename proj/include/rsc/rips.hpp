#pragma once

#include <optional>

#include "rsc/complex.hpp"
#include "rsc/geometry.hpp"

namespace rsc {

struct RipsParams {
    double epsilon = 0.0; // two points joined iff distance < epsilon (strict)
    std::optional<int> max_dim_cap;
    std::size_t simplex_cap = SimplicialComplex::kDefaultSimplexCap;
};

/// theta = (epsilon / side)^d, the coverage parameter of the regime analysis.
double theta_of(const Domain& domain, double epsilon);
double epsilon_of_theta(const Domain& domain, double theta);

/**
 * Vietoris-Rips complex by incremental clique expansion: k-simplices are
 * exactly the (k+1)-cliques of the proximity graph at threshold epsilon.
 * Vertex ids are the point indices. With max_dim_cap set, the result is the
 * cap-skeleton. Throws ResourceError when the simplex cap is exceeded.
 */
SimplicialComplex rips_complex(const PointConfiguration& cfg, const RipsParams& params);

/// Same, restricted to the given point indices (ids are preserved).
SimplicialComplex rips_complex(const PointConfiguration& cfg, const RipsParams& params,
                               const std::vector<VertexId>& keep);

/**
 * Clique number of the proximity graph under the uniform norm, computed
 * geometrically: cliques are exactly the point sets fitting in an open
 * epsilon-box, so a per-coordinate anchored window scan is exact. Does not
 * build the complex. Uniform metric only.
 */
int max_box_clique(const PointConfiguration& cfg, double epsilon);

} // namespace rsc
