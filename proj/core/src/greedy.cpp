#include "antiramsey/greedy.hpp"

#include <algorithm>

namespace antiramsey {

namespace {

void require_formula_graph(const MultipartiteGraph& g) {
    if (g.k < 2)
        throw domain_error("need at least two parts");
}

int padded_part(const MultipartiteGraph& g, int i) {
    return i < g.k ? g.parts[i] : 0;
}

} // namespace

GreedyTrace algorithm_a(const MultipartiteGraph& g, int r) {
    require_formula_graph(g);
    if (r < 1 || r > g.n)
        throw domain_error("selection size out of range");

    std::vector<int> remaining = g.parts;
    int remaining_n = g.n;
    GreedyTrace trace;
    trace.selection.counts.assign(g.k, 0);
    trace.selection.r = r;
    trace.pick_order.reserve(r);
    trace.degrees_at_pick.reserve(r);

    for (int step = 0; step < r; ++step) {
        int best = 0;
        for (int i = 1; i < g.k; ++i)
            if (remaining[i] > remaining[best])
                best = i;
        trace.pick_order.push_back(best);
        trace.degrees_at_pick.push_back(remaining_n - remaining[best]);
        ++trace.selection.counts[best];
        --remaining[best];
        --remaining_n;
    }
    return trace;
}

bool is_min_selection(const MultipartiteGraph& g, const VertexSelection& sel) {
    require_formula_graph(g);
    validate_selection(g, sel);
    for (int i = 0; i < g.k; ++i) {
        for (int j = 0; j < g.k; ++j) {
            if (i == j) continue;
            int left_i = g.parts[i] - sel.counts[i];
            int left_j = g.parts[j] - sel.counts[j];
            if (left_i >= left_j + 2 && sel.counts[j] != 0)
                return false;
        }
    }
    return true;
}

std::int64_t min_boundary_edges(const MultipartiteGraph& g, int r) {
    return boundary_edge_count(g, algorithm_a(g, r).selection);
}

std::int64_t closed_form_boundary(const MultipartiteGraph& g, int r) {
    require_formula_graph(g);
    if (r > g.n)
        throw domain_error("selection size out of range");
    std::int64_t n = g.n;
    std::int64_t p1 = padded_part(g, 0);
    std::int64_t p2 = padded_part(g, 1);
    std::int64_t p3 = padded_part(g, 2);
    std::int64_t p4 = padded_part(g, 3);

    switch (r) {
    case 2:
        if (p1 > p2) return 2 * n - 2 * p1;
        return 2 * n - p1 - p2 - 1;
    case 3:
        if (p1 >= p2 + 2) return 3 * n - 3 * p1;
        if (p2 + 1 >= p1 && p1 >= p3 + 1) return 3 * n - 2 * p1 - p2 - 2;
        return 3 * n - p1 - p2 - p3 - 3; // p1 = p2 = p3
    case 4:
        if (p1 >= p2 + 3) return 4 * n - 4 * p1;
        if (p1 == p2 + 2 || (p1 == p2 + 1 && p1 >= p3 + 2))
            return 4 * n - 3 * p1 - p2 - 3;
        if (p1 == p2 && p1 >= p3 + 1) return 4 * n - 2 * p1 - 2 * p2 - 4;
        if (p4 + 1 <= p1 && p1 <= p2 + 1 && p2 == p3)
            return 4 * n - 2 * p1 - p2 - p3 - 5;
        return 4 * n - p1 - p2 - p3 - p4 - 6; // p1 = p2 = p3 = p4
    default:
        throw domain_error("no closed form for this selection size");
    }
}

} // namespace antiramsey
