#include "rsc/boundary.hpp"

#include <ostream>
#include <unordered_map>

#include "rsc/errors.hpp"

namespace rsc {

std::vector<std::vector<int>> BoundaryMatrix::dense() const {
    std::vector<std::vector<int>> m(rows(), std::vector<int>(cols(), 0));
    for (std::size_t c = 0; c < cols(); ++c)
        for (auto [r, v] : columns[c]) m[r][c] = v;
    return m;
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& cx, int k) {
    if (k < 1) throw ValidationError("boundary dimension must be >= 1");
    BoundaryMatrix m;
    m.k = k;
    m.row_simplices = cx.sorted_simplices(k - 1);
    m.col_simplices = cx.sorted_simplices(k);

    std::unordered_map<Simplex, std::int32_t, SimplexHash> row_of;
    row_of.reserve(m.row_simplices.size());
    for (std::size_t i = 0; i < m.row_simplices.size(); ++i)
        row_of.emplace(m.row_simplices[i], static_cast<std::int32_t>(i));

    m.columns.resize(m.col_simplices.size());
    for (std::size_t c = 0; c < m.col_simplices.size(); ++c) {
        const Simplex& s = m.col_simplices[c];
        auto& col = m.columns[c];
        col.reserve(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            std::int8_t sign = (i % 2 == 0) ? 1 : -1;
            col.emplace_back(row_of.at(s.facet(i)), sign);
        }
        std::sort(col.begin(), col.end());
    }
    return m;
}

void write_boundary_triplets(std::ostream& os, const BoundaryMatrix& m) {
    os << "# boundary k=" << m.k << " rows=" << m.rows() << " cols=" << m.cols()
       << "\n# rows:";
    for (const Simplex& s : m.row_simplices) os << ' ' << s.str();
    os << "\n# cols:";
    for (const Simplex& s : m.col_simplices) os << ' ' << s.str();
    os << '\n';
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (auto [r, v] : m.columns[c])
            os << r << ' ' << c << ' ' << static_cast<int>(v) << '\n';
}

} // namespace rsc
