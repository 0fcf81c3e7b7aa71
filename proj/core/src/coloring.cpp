#include "antiramsey/coloring.hpp"

namespace antiramsey {

void validate_coloring(const Coloring& c) {
    std::int64_t edges = edge_count(c.graph);
    if (static_cast<std::int64_t>(c.edge_color.size()) != edges)
        throw domain_error("coloring does not cover the edge set");
    if (c.num_classes < (edges > 0 ? 1 : 0))
        throw domain_error("coloring needs at least one class");
    std::vector<bool> seen(static_cast<size_t>(c.num_classes) + 1, false);
    for (int color : c.edge_color) {
        if (color < 1 || color > c.num_classes)
            throw domain_error("edge color out of range");
        seen[static_cast<size_t>(color)] = true;
    }
    for (int color = 1; color <= c.num_classes; ++color)
        if (!seen[static_cast<size_t>(color)])
            throw domain_error("color class " + std::to_string(color) + " is empty");
}

} // namespace antiramsey
