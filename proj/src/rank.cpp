#include "rsc/rank.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "rsc/errors.hpp"
#include "rsc/exact.hpp"

namespace rsc {

FieldChoice FieldChoice::gf(std::uint32_t p) {
    if (p < 2 || p > 0x7fffffffu)
        throw ValidationError("field characteristic out of range: " + std::to_string(p));
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw ValidationError("field characteristic must be prime: " + std::to_string(p));
    FieldChoice f;
    f.kind = Kind::prime;
    f.p = p;
    return f;
}

std::string FieldChoice::str() const {
    return kind == Kind::rationals ? "Q" : "GF(" + std::to_string(p) + ")";
}

namespace {

struct Overflow {};

inline long long mul_ck(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline long long sub_ck(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
}

inline Int mul_ck(const Int& a, const Int& b) { return a * b; }
inline Int sub_ck(const Int& a, const Int& b) { return a - b; }

inline long long gcd_of(long long a, long long b) { return std::gcd(a, b); }
inline Int gcd_of(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline bool is_unit(long long v) { return v == 1 || v == -1; }
inline bool is_unit(const Int& v) { return v == 1 || v == -1; }

template <typename I>
struct Row {
    std::vector<std::pair<std::int32_t, I>> e; // column-sorted, nonzero
    std::uint32_t id = 0;                      // stable tie-break
    std::int32_t lead() const { return e.front().first; }
};

/// r <- pv * r - rv * p, then strip the content gcd. Exact over Q.
template <typename I>
void combine(Row<I>& r, const I& rv, const Row<I>& p, const I& pv) {
    std::vector<std::pair<std::int32_t, I>> out;
    out.reserve(r.e.size() + p.e.size());
    std::size_t i = 0, j = 0;
    while (i < r.e.size() || j < p.e.size()) {
        if (j == p.e.size() || (i < r.e.size() && r.e[i].first < p.e[j].first)) {
            out.emplace_back(r.e[i].first, mul_ck(pv, r.e[i].second));
            ++i;
        } else if (i == r.e.size() || p.e[j].first < r.e[i].first) {
            out.emplace_back(p.e[j].first, sub_ck(I(0), mul_ck(rv, p.e[j].second)));
            ++j;
        } else {
            I v = sub_ck(mul_ck(pv, r.e[i].second), mul_ck(rv, p.e[j].second));
            if (v != 0) out.emplace_back(r.e[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    I g = 0;
    for (const auto& [c, v] : out) {
        g = gcd_of(g, v);
        if (is_unit(g)) break;
    }
    if (g != 0 && !is_unit(g))
        for (auto& [c, v] : out) v /= g;
    r.e = std::move(out);
}

template <typename I>
int eliminate_rational(std::vector<Row<I>> rows) {
    int rank = 0;
    while (!rows.empty()) {
        std::int32_t c = rows[0].lead();
        for (const auto& r : rows) c = std::min(c, r.lead());
        // pivot: unit entry first, then fewest nonzeros, then stable id
        std::size_t piv = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].lead() != c) continue;
            if (piv == rows.size()) {
                piv = i;
                continue;
            }
            auto better = [&](const Row<I>& a, const Row<I>& b) {
                bool ua = is_unit(a.e.front().second), ub = is_unit(b.e.front().second);
                if (ua != ub) return ua;
                if (a.e.size() != b.e.size()) return a.e.size() < b.e.size();
                return a.id < b.id;
            };
            if (better(rows[i], rows[piv])) piv = i;
        }
        Row<I> pivot = std::move(rows[piv]);
        rows.erase(rows.begin() + piv);
        const I pv = pivot.e.front().second;
        std::vector<Row<I>> next;
        next.reserve(rows.size());
        for (auto& r : rows) {
            if (r.lead() == c) {
                combine(r, r.e.front().second, pivot, pv);
                if (r.e.empty()) continue;
            }
            next.push_back(std::move(r));
        }
        rows = std::move(next);
        ++rank;
    }
    return rank;
}

int eliminate_mod_p(std::vector<Row<long long>> input, std::uint32_t p) {
    struct MRow {
        std::vector<std::pair<std::int32_t, std::uint64_t>> e;
        std::uint32_t id;
        std::int32_t lead() const { return e.front().first; }
    };
    auto pow_mod = [&](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1 % p;
        b %= p;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    std::vector<MRow> rows;
    for (auto& r : input) {
        MRow m;
        m.id = r.id;
        for (auto [c, v] : r.e) {
            long long vv = v % static_cast<long long>(p);
            if (vv < 0) vv += p;
            if (vv) m.e.emplace_back(c, static_cast<std::uint64_t>(vv));
        }
        if (!m.e.empty()) rows.push_back(std::move(m));
    }
    int rank = 0;
    while (!rows.empty()) {
        std::int32_t c = rows[0].lead();
        for (const auto& r : rows) c = std::min(c, r.lead());
        std::size_t piv = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].lead() != c) continue;
            if (piv == rows.size() || rows[i].e.size() < rows[piv].e.size() ||
                (rows[i].e.size() == rows[piv].e.size() && rows[i].id < rows[piv].id))
                piv = i;
        }
        MRow pivot = std::move(rows[piv]);
        rows.erase(rows.begin() + piv);
        const std::uint64_t inv = pow_mod(pivot.e.front().second, p - 2);
        std::vector<MRow> next;
        next.reserve(rows.size());
        for (auto& r : rows) {
            if (r.lead() == c) {
                const std::uint64_t f = r.e.front().second * inv % p;
                std::vector<std::pair<std::int32_t, std::uint64_t>> out;
                out.reserve(r.e.size() + pivot.e.size());
                std::size_t i = 0, j = 0;
                while (i < r.e.size() || j < pivot.e.size()) {
                    if (j == pivot.e.size() ||
                        (i < r.e.size() && r.e[i].first < pivot.e[j].first)) {
                        out.push_back(r.e[i++]);
                    } else if (i == r.e.size() || pivot.e[j].first < r.e[i].first) {
                        out.emplace_back(pivot.e[j].first,
                                         (p - f * pivot.e[j].second % p) % p);
                        ++j;
                    } else {
                        std::uint64_t v = (r.e[i].second + p - f * pivot.e[j].second % p) % p;
                        if (v) out.emplace_back(r.e[i].first, v);
                        ++i;
                        ++j;
                    }
                }
                r.e = std::move(out);
                if (r.e.empty()) continue;
            }
            next.push_back(std::move(r));
        }
        rows = std::move(next);
        ++rank;
    }
    return rank;
}

} // namespace

int sparse_rank(const std::vector<SparseIntRow>& in, const FieldChoice& field) {
    std::vector<Row<long long>> rows;
    rows.reserve(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
        Row<long long> r;
        r.id = static_cast<std::uint32_t>(i);
        for (auto [c, v] : in[i])
            if (v != 0) r.e.emplace_back(c, v);
        std::sort(r.e.begin(), r.e.end());
        if (!r.e.empty()) rows.push_back(std::move(r));
    }
    if (field.kind == FieldChoice::Kind::prime)
        return eliminate_mod_p(std::move(rows), field.p);
    try {
        return eliminate_rational(rows);
    } catch (const Overflow&) {
        std::vector<Row<Int>> wide;
        wide.reserve(rows.size());
        for (const auto& r : rows) {
            Row<Int> w;
            w.id = r.id;
            for (auto [c, v] : r.e) w.e.emplace_back(c, Int(v));
            wide.push_back(std::move(w));
        }
        return eliminate_rational(std::move(wide));
    }
}

int rank(const BoundaryMatrix& m, const FieldChoice& field) {
    std::vector<SparseIntRow> rows(m.rows());
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (auto [r, v] : m.columns[c])
            rows[r].emplace_back(static_cast<std::int32_t>(c), v);
    return sparse_rank(rows, field);
}

} // namespace rsc
