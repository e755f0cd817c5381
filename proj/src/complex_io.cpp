#include "rsc/complex_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "rsc/errors.hpp"

namespace rsc {

void write_complex(std::ostream& os, const SimplicialComplex& cx) {
    os << "ascomplex v1\n";
    for (const Simplex& s : cx.maximal_simplices()) {
        const auto& vs = s.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (i) os << ' ';
            os << vs[i];
        }
        os << '\n';
    }
}

SimplicialComplex read_complex(std::istream& is, std::size_t simplex_cap) {
    std::string line;
    if (!std::getline(is, line))
        throw ValidationError("empty complex input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "ascomplex v1")
        throw ValidationError("bad complex header: expected 'ascomplex v1'");
    SimplicialComplex cx(simplex_cap);
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<VertexId> vs;
        long long v;
        while (ls >> v) {
            if (v < 0)
                throw ValidationError("negative vertex id on line " + std::to_string(lineno));
            vs.push_back(static_cast<VertexId>(v));
        }
        if (!ls.eof())
            throw ValidationError("malformed simplex on line " + std::to_string(lineno));
        if (vs.empty()) continue;
        cx.insert_closure(Simplex(std::move(vs)));
    }
    return cx;
}

void write_complex_file(const std::string& path, const SimplicialComplex& cx) {
    std::ofstream os(path);
    if (!os) throw ValidationError("cannot open for writing: " + path);
    write_complex(os, cx);
}

SimplicialComplex read_complex_file(const std::string& path, std::size_t simplex_cap) {
    std::ifstream is(path);
    if (!is) throw ValidationError("cannot open for reading: " + path);
    return read_complex(is, simplex_cap);
}

} // namespace rsc
