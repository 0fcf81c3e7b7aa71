#pragma once

#include <cstdint>
#include <vector>

#include "antiramsey/multipartite.hpp"

namespace antiramsey {

// Non-increasing positive component sizes of a spanning subgraph, largest first.
struct ComponentSizeSequence {
    std::vector<int> sizes;
    friend bool operator==(const ComponentSizeSequence&, const ComponentSizeSequence&) = default;
};

void validate_sequence(const ComponentSizeSequence& seq);

// Spanning vertex partition of a multipartite graph up to exchangeability:
// counts[i][j] = vertices of part i placed in block j.  Blocks are kept with
// non-increasing sizes; value is the total number of edges inside blocks.
struct VertexPartition {
    std::vector<std::vector<int>> counts; // k rows, one per part
    std::vector<int> block_sizes;         // column sums, non-increasing
    std::int64_t value = 0;

    int blocks() const { return static_cast<int>(block_sizes.size()); }
};

// Checks margins against g, block sizes, and the stored value.
void validate_partition(const MultipartiteGraph& g, const VertexPartition& part);

// Edges inside blocks: sum_j [ C(s_j,2) - sum_i C(counts[i][j],2) ].
std::int64_t partition_value(const MultipartiteGraph& g, const std::vector<std::vector<int>>& counts);

// Reorders columns into canonical form: size descending, then column vector
// lexicographically descending.  Recomputes block_sizes and value.
VertexPartition canonical_partition(const MultipartiteGraph& g, std::vector<std::vector<int>> counts);

// Tie order used when several partitions achieve the same value: prefer the
// lexicographically larger block-size sequence, then the lexicographically
// smaller count matrix (flattened block by block).  Returns true when `a`
// is preferred over `b`.
bool preferred_certificate(const VertexPartition& a, const VertexPartition& b);

} // namespace antiramsey
