#include "rsc/point_process.hpp"

#include <cmath>
#include <set>

#include "rsc/errors.hpp"

namespace rsc {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed ^ mix64(index + 1));
}

double Rng::uniform() {
    return static_cast<double>(m_eng() >> 11) * 0x1.0p-53;
}

std::size_t Rng::uniform_index(std::size_t n) {
    if (n == 0) throw ValidationError("uniform_index on empty range");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = m_eng();
    } while (x >= limit);
    return static_cast<std::size_t>(x % n);
}

unsigned long long Rng::poisson(double mean) {
    if (mean < 0) throw ValidationError("poisson mean must be >= 0");
    // product inversion in chunks; a sum of independent Poissons is Poisson
    unsigned long long total = 0;
    double remaining = mean;
    while (remaining > 0) {
        const double chunk = std::min(remaining, 30.0);
        remaining -= chunk;
        const double limit = std::exp(-chunk);
        double prod = uniform();
        while (prod >= limit) {
            ++total;
            prod *= uniform();
        }
    }
    return total;
}

namespace {
PointConfiguration draw_uniform(const Domain& domain, std::size_t n, Rng& rng,
                                std::uint64_t seed) {
    PointConfiguration cfg;
    cfg.domain = domain;
    cfg.seed = seed;
    cfg.coords.reserve(n * domain.dim);
    std::set<std::vector<double>> seen;
    std::vector<double> p(domain.dim);
    for (std::size_t i = 0; i < n; ++i) {
        do {
            for (int j = 0; j < domain.dim; ++j) p[j] = domain.side * rng.uniform();
        } while (!seen.insert(p).second); // simple configuration: redraw duplicates
        cfg.coords.insert(cfg.coords.end(), p.begin(), p.end());
    }
    return cfg;
}
} // namespace

PointConfiguration binomial_process(const Domain& domain, std::size_t n,
                                    std::uint64_t seed) {
    Rng rng(seed);
    return draw_uniform(domain, n, rng, seed);
}

PointConfiguration poisson_process(const Domain& domain, double lambda,
                                   std::uint64_t seed, std::size_t count_cap) {
    if (lambda <= 0) throw ValidationError("poisson intensity must be > 0");
    const double mean = lambda * std::pow(domain.side, domain.dim);
    if (mean > static_cast<double>(count_cap))
        throw ResourceError("expected point count " + std::to_string(mean) +
                            " exceeds cap " + std::to_string(count_cap));
    Rng rng(seed);
    const auto n = static_cast<std::size_t>(rng.poisson(mean));
    if (n > count_cap)
        throw ResourceError("drawn point count " + std::to_string(n) + " exceeds cap " +
                            std::to_string(count_cap));
    return draw_uniform(domain, n, rng, seed);
}

} // namespace rsc
