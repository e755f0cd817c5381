#include "rsc/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "rsc/errors.hpp"

namespace rsc {

Metric metric_from_string(const std::string& name) {
    if (name == "uniform") return Metric::uniform;
    if (name == "euclidean") return Metric::euclidean;
    throw ValidationError("unknown metric: " + name);
}

std::string metric_name(Metric m) {
    return m == Metric::uniform ? "uniform" : "euclidean";
}

double Domain::coord_delta(double x, double y) const {
    double d = std::fabs(x - y);
    if (wrap) d = std::min(d, side - d);
    return d;
}

double Domain::distance(std::span<const double> x, std::span<const double> y) const {
    if (metric == Metric::uniform) {
        double m = 0.0;
        for (int i = 0; i < dim; ++i) m = std::max(m, coord_delta(x[i], y[i]));
        return m;
    }
    double s = 0.0;
    for (int i = 0; i < dim; ++i) {
        double d = coord_delta(x[i], y[i]);
        s += d * d;
    }
    return std::sqrt(s);
}

namespace {
std::string fmt_double(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}
} // namespace

void write_points(std::ostream& os, const PointConfiguration& cfg) {
    os << "points v1 d=" << cfg.domain.dim << " a=" << fmt_double(cfg.domain.side);
    if (!cfg.domain.wrap) os << " mode=square";
    os << '\n';
    for (std::size_t i = 0; i < cfg.size(); ++i) {
        auto p = cfg.point(i);
        for (int j = 0; j < cfg.domain.dim; ++j) {
            if (j) os << ' ';
            os << fmt_double(p[j]);
        }
        os << '\n';
    }
}

PointConfiguration read_points(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw ValidationError("empty point input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream hs(line);
    std::string tag, ver;
    hs >> tag >> ver;
    if (tag != "points" || ver != "v1")
        throw ValidationError("bad point header: expected 'points v1 ...'");
    PointConfiguration cfg;
    bool have_d = false, have_a = false;
    std::string kv;
    while (hs >> kv) {
        auto eq = kv.find('=');
        std::string key = kv.substr(0, eq);
        std::string val = eq == std::string::npos ? "" : kv.substr(eq + 1);
        if (key == "d") {
            cfg.domain.dim = std::stoi(val);
            have_d = true;
        } else if (key == "a") {
            cfg.domain.side = std::stod(val);
            have_a = true;
        } else if (key == "mode") {
            if (val != "square") throw ValidationError("unknown point mode: " + val);
            cfg.domain.wrap = false;
        } else {
            throw ValidationError("unknown point header field: " + key);
        }
    }
    if (!have_d || !have_a) throw ValidationError("point header missing d= or a=");
    if (cfg.domain.dim < 1) throw ValidationError("point dimension must be >= 1");
    if (cfg.domain.side <= 0) throw ValidationError("torus side must be > 0");

    std::size_t lineno = 1;
    std::set<std::vector<double>> seen;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<double> p;
        double x;
        while (ls >> x) p.push_back(x);
        if (static_cast<int>(p.size()) != cfg.domain.dim)
            throw ValidationError("point on line " + std::to_string(lineno) + " has " +
                                  std::to_string(p.size()) + " coordinates, expected " +
                                  std::to_string(cfg.domain.dim));
        if (!seen.insert(p).second)
            throw ValidationError("duplicate point on line " + std::to_string(lineno));
        cfg.coords.insert(cfg.coords.end(), p.begin(), p.end());
    }
    return cfg;
}

void write_points_file(const std::string& path, const PointConfiguration& cfg) {
    std::ofstream os(path);
    if (!os) throw ValidationError("cannot open for writing: " + path);
    write_points(os, cfg);
}

PointConfiguration read_points_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ValidationError("cannot open for reading: " + path);
    return read_points(is);
}

std::vector<VertexId> add_boundary_grid(PointConfiguration& cfg, double step) {
    if (cfg.domain.dim != 2)
        throw ValidationError("boundary grid requires d = 2");
    if (step <= 0) throw ValidationError("boundary grid step must be > 0");
    const double a = cfg.domain.side;
    const int m = std::max(1, static_cast<int>(std::ceil(a / step)));
    const double h = a / m;
    std::vector<VertexId> ids;
    auto push = [&](double x, double y) {
        ids.push_back(static_cast<VertexId>(cfg.size()));
        cfg.coords.push_back(x);
        cfg.coords.push_back(y);
    };
    for (int i = 0; i < m; ++i) push(i * h, 0.0);      // bottom
    for (int i = 0; i < m; ++i) push(a, i * h);        // right
    for (int i = 0; i < m; ++i) push(a - i * h, a);    // top
    for (int i = 0; i < m; ++i) push(0.0, a - i * h);  // left
    return ids;
}

namespace {
double cross(double ox, double oy, double ax, double ay, double bx, double by) {
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox);
}
} // namespace

std::vector<VertexId> hull_filter(const PointConfiguration& cfg,
                                  const std::vector<VertexId>& critical) {
    if (cfg.domain.dim > 2)
        throw ValidationError("hull filter supports d <= 2 only");
    if (cfg.domain.wrap)
        throw ValidationError("hull filter requires square (non-wrapping) mode");
    std::vector<VertexId> kept;
    std::set<VertexId> crit(critical.begin(), critical.end());
    for (VertexId c : crit)
        if (c >= cfg.size())
            throw ValidationError("critical id " + std::to_string(c) + " out of range");

    if (cfg.domain.dim == 1) {
        double lo = 1e300, hi = -1e300;
        for (VertexId c : crit) {
            lo = std::min(lo, cfg.point(c)[0]);
            hi = std::max(hi, cfg.point(c)[0]);
        }
        for (std::size_t i = 0; i < cfg.size(); ++i)
            if (crit.count(static_cast<VertexId>(i)) ||
                (cfg.point(i)[0] >= lo && cfg.point(i)[0] <= hi))
                kept.push_back(static_cast<VertexId>(i));
        return kept;
    }

    // Andrew monotone chain on the critical points
    std::vector<std::pair<double, double>> pts;
    for (VertexId c : crit) pts.emplace_back(cfg.point(c)[0], cfg.point(c)[1]);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<std::pair<double, double>> hull;
    if (pts.size() >= 3) {
        auto build = [&](auto begin, auto end) {
            std::size_t base = hull.size();
            for (auto it = begin; it != end; ++it) {
                while (hull.size() >= base + 2 &&
                       cross(hull[hull.size() - 2].first, hull[hull.size() - 2].second,
                             hull.back().first, hull.back().second, it->first,
                             it->second) <= 0)
                    hull.pop_back();
                hull.push_back(*it);
            }
            hull.pop_back();
        };
        build(pts.begin(), pts.end());
        build(pts.rbegin(), pts.rend());
    }

    auto inside = [&](double x, double y) {
        if (hull.size() < 3) return false;
        for (std::size_t i = 0; i < hull.size(); ++i) {
            auto [ax, ay] = hull[i];
            auto [bx, by] = hull[(i + 1) % hull.size()];
            if (cross(ax, ay, bx, by, x, y) < -1e-12) return false;
        }
        return true;
    };
    for (std::size_t i = 0; i < cfg.size(); ++i)
        if (crit.count(static_cast<VertexId>(i)) ||
            inside(cfg.point(i)[0], cfg.point(i)[1]))
            kept.push_back(static_cast<VertexId>(i));
    return kept;
}

} // namespace rsc
