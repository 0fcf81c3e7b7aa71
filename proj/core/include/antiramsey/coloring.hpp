#pragma once

#include <vector>

#include "antiramsey/multipartite.hpp"

namespace antiramsey {

// Edge coloring with classes 1..num_classes; edge_color is indexed by the
// canonical edge order of labeled_edges(graph).  Every class is non-empty.
// Class 1 plays the role of the shared class in witness colorings.
struct Coloring {
    MultipartiteGraph graph;
    std::vector<int> edge_color;
    int num_classes = 0;
};

// Checks the size against |E(graph)|, the color range, and that every class
// 1..num_classes actually appears.
void validate_coloring(const Coloring& c);

} // namespace antiramsey
