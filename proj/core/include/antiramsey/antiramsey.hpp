#pragma once

#include <cstdint>
#include <optional>

#include "antiramsey/coloring.hpp"
#include "antiramsey/extremal.hpp"
#include "antiramsey/multipartite.hpp"
#include "antiramsey/partition.hpp"

namespace antiramsey {

struct AntiRamseyResult {
    std::int64_t value = 0;      // largest class count with no rainbow tree of q edges
    std::int64_t ellq_value = 0; // the underlying spanning-subgraph optimum
    Method method = Method::sequence_solver;
    std::optional<VertexPartition> certificate;
};

// Maximum number of color classes an edge coloring of g may use while no
// tree with q edges is rainbow.  Exceeding it by one forces such a tree.
// Equals ellq(g, q) + 1; requires k >= 2 and 2 <= q <= n-1.
AntiRamseyResult anti_ramsey(const MultipartiteGraph& g, int q, const SolveOptions& options = {});

// Closed form when q >= (4n-2)/5 and the largest part leads the second by at
// least (n+2)/5: |E| + 1 - (n-q+1)(n-p1).  Absent outside the guard.
std::optional<std::int64_t> ar_large_gap_fastpath(const MultipartiteGraph& g, int q);

// Labeled witness coloring using anti_ramsey(g, q) classes and admitting no
// rainbow tree with q edges: every edge inside a certificate block gets its
// own class, all remaining edges share class 1.
Coloring witness_coloring(const MultipartiteGraph& g, int q, const SolveOptions& options = {});

// The same construction from an explicit certificate partition.
Coloring witness_from_certificate(const MultipartiteGraph& g, const VertexPartition& certificate);

} // namespace antiramsey
