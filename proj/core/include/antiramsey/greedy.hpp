#pragma once

#include <cstdint>
#include <vector>

#include "antiramsey/multipartite.hpp"

namespace antiramsey {

// Trace of the min-degree greedy selection: pick_order[i] is the part the
// i-th vertex was taken from, degrees_at_pick[i] its degree in the graph
// that remained before the pick.  The degrees sum to the boundary edge
// count of the final selection.
struct GreedyTrace {
    VertexSelection selection;
    std::vector<int> pick_order;
    std::vector<std::int64_t> degrees_at_pick;
};

// Repeatedly removes a vertex of minimum degree, i.e. one from a currently
// largest remaining part.  Ties: lowest part index.  Requires k >= 2 and
// 1 <= r <= n.  The result minimizes the boundary edge count over all
// r-vertex selections.
GreedyTrace algorithm_a(const MultipartiteGraph& g, int r);

// Structural test for minimality: whenever part i keeps at least two more
// unselected vertices than part j, part j must contribute nothing.
// Equivalent to sel having minimum boundary edge count among selections of
// the same size.
bool is_min_selection(const MultipartiteGraph& g, const VertexSelection& sel);

// min over r-vertex selections of the boundary edge count (greedy).
std::int64_t min_boundary_edges(const MultipartiteGraph& g, int r);

// Closed forms for r = 2, 3, 4 (guards checked top-down on the canonical
// parts, padded with zero sizes past k).  Throws domain_error for other r.
std::int64_t closed_form_boundary(const MultipartiteGraph& g, int r);

} // namespace antiramsey
