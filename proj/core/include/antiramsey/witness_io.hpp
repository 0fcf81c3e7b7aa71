#pragma once

#include <iosfwd>
#include <string>

#include "antiramsey/coloring.hpp"

namespace antiramsey {

// Witness file format:
//   parts: p1,p2,...
//   q: <int>
//   t: <int>
// followed by one line per edge, "i1 j1 i2 j2 c" with 0-based part/offset
// pairs, endpoints in canonical order, lines sorted lexicographically.
struct WitnessFile {
    Coloring coloring;
    int q = 0;
};

void write_witness(std::ostream& out, const Coloring& coloring, int q);
void write_witness_file(const std::string& path, const Coloring& coloring, int q);

// Parses and validates; throws domain_error on malformed input, missing or
// duplicate edges, out-of-range colors, or empty classes.
WitnessFile read_witness(std::istream& in);
WitnessFile read_witness_file(const std::string& path);

} // namespace antiramsey
