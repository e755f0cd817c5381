#pragma once

#include <iosfwd>
#include <string>

#include "rsc/complex.hpp"

namespace rsc {

/// Text complex format, one maximal simplex per line:
///   ascomplex v1
///   0 1 2
///   1 4
/// The writer emits maximal simplices sorted lexicographically; the reader
/// rebuilds the face closure.
void write_complex(std::ostream& os, const SimplicialComplex& cx);
SimplicialComplex read_complex(std::istream& is,
                               std::size_t simplex_cap = SimplicialComplex::kDefaultSimplexCap);

void write_complex_file(const std::string& path, const SimplicialComplex& cx);
SimplicialComplex read_complex_file(const std::string& path,
                                    std::size_t simplex_cap = SimplicialComplex::kDefaultSimplexCap);

} // namespace rsc
