#pragma once

#include <cstdint>
#include <random>

#include "rsc/geometry.hpp"

namespace rsc {

/// SplitMix64 finalizer; the basis of the child-seed rule.
std::uint64_t mix64(std::uint64_t x);

/// Child seed for trial `index` under master seed `seed`. Parallel trials
/// must use these so aggregates are independent of scheduling.
std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index);

/**
 * Deterministic seeded generator. The same seed yields the same stream on
 * every platform: uniforms come from the top 53 bits of mt19937_64 and the
 * Poisson draw uses product-of-uniforms inversion.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : m_eng(mix64(seed)) {}
    std::uint64_t bits() { return m_eng(); }
    double uniform(); // [0, 1)
    std::size_t uniform_index(std::size_t n); // unbiased in [0, n)
    unsigned long long poisson(double mean);

private:
    std::mt19937_64 m_eng;
};

/// Exactly n points i.i.d. uniform on the domain; identical coordinates for
/// identical seeds. Duplicate draws are rejected and redrawn.
PointConfiguration binomial_process(const Domain& domain, std::size_t n,
                                    std::uint64_t seed);

/// N ~ Poisson(lambda * a^d) points, then N uniform points.
PointConfiguration poisson_process(const Domain& domain, double lambda,
                                   std::uint64_t seed,
                                   std::size_t count_cap = 1u << 22);

} // namespace rsc
