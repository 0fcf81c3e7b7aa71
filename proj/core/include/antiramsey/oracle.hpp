#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "antiramsey/coloring.hpp"
#include "antiramsey/extremal.hpp"
#include "antiramsey/multipartite.hpp"
#include "antiramsey/partition.hpp"

namespace antiramsey {

// Independent exhaustive reference implementations.  They share no formulas
// with the solver: everything is counted on labeled vertices and edges.
// Each has a hard size cap and throws resource_error beyond it; results are
// exact or absent, never approximate.

struct OracleEllqResult {
    std::int64_t value = 0;
    VertexPartition certificate;
};

// Maximum edges inside blocks over all labeled vertex partitions with at
// least two blocks whose two largest blocks total at most q vertices.
OracleEllqResult oracle_ellq(const MultipartiteGraph& g, int q, int max_n = kDefaultOracleMaxN);

// Minimum boundary edge count over all labeled r-vertex subsets, counted by
// direct edge incidence.
std::int64_t oracle_min_boundary(const MultipartiteGraph& g, int r, int max_n = kDefaultOracleMaxN);

struct RainbowTree {
    std::vector<LabeledEdge> edges; // canonical order
    std::vector<int> colors;        // colors[i] = class of edges[i], pairwise distinct
};

// Searches for a tree with q edges whose edge colors are pairwise distinct.
// Trees are grown from each vertex as a canonical root so no labeled tree is
// visited twice; branches reusing a color are cut.
std::optional<RainbowTree> find_rainbow_tree(const Coloring& coloring, int q);

struct OracleArResult {
    std::int64_t value = 0;
    Coloring witness;
};

// Maximum number of color classes admitting no rainbow tree with q edges.
// Colorings are identified with edge partitions; class counts are tried
// from |E| downward and the first rainbow-free partition is returned.
OracleArResult oracle_ar(const MultipartiteGraph& g, int q,
                         std::int64_t max_edges = kDefaultOracleMaxEdges);

struct InducedMaxResult {
    std::int64_t value = 0;
    std::vector<std::vector<int>> shapes; // all maximizing per-part count vectors
};

// Maximum induced edge count over all b-vertex subsets, with every
// maximizing count shape (deduplicated, lexicographically sorted).
InducedMaxResult max_induced_subgraph(const MultipartiteGraph& g, int b,
                                      int max_n = kDefaultOracleMaxN);

} // namespace antiramsey
