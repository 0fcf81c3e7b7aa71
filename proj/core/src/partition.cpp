#include "antiramsey/partition.hpp"

#include <algorithm>
#include <numeric>

namespace antiramsey {

void validate_sequence(const ComponentSizeSequence& seq) {
    if (seq.sizes.empty())
        throw domain_error("empty component size sequence");
    for (size_t i = 0; i < seq.sizes.size(); ++i) {
        if (seq.sizes[i] <= 0)
            throw domain_error("component sizes must be positive");
        if (i && seq.sizes[i] > seq.sizes[i - 1])
            throw domain_error("component sizes must be non-increasing");
    }
}

std::int64_t partition_value(const MultipartiteGraph& g, const std::vector<std::vector<int>>& counts) {
    if (static_cast<int>(counts.size()) != g.k)
        throw domain_error("count matrix has wrong number of rows");
    size_t m = counts.empty() ? 0 : counts[0].size();
    std::int64_t value = 0;
    for (size_t j = 0; j < m; ++j) {
        std::int64_t size = 0;
        std::int64_t same_part = 0;
        for (int i = 0; i < g.k; ++i) {
            size += counts[i][j];
            same_part += pairs(counts[i][j]);
        }
        value += pairs(size) - same_part;
    }
    return value;
}

void validate_partition(const MultipartiteGraph& g, const VertexPartition& part) {
    if (static_cast<int>(part.counts.size()) != g.k)
        throw domain_error("count matrix has wrong number of rows");
    size_t m = part.block_sizes.size();
    if (m < 2)
        throw domain_error("partition needs at least two blocks");
    for (int i = 0; i < g.k; ++i) {
        if (part.counts[i].size() != m)
            throw domain_error("count matrix has ragged rows");
        int row = 0;
        for (int c : part.counts[i]) {
            if (c < 0)
                throw domain_error("negative count in partition");
            row += c;
        }
        if (row != g.parts[i])
            throw domain_error("row sum does not match part size");
    }
    for (size_t j = 0; j < m; ++j) {
        int col = 0;
        for (int i = 0; i < g.k; ++i)
            col += part.counts[i][j];
        if (col != part.block_sizes[j])
            throw domain_error("column sum does not match block size");
        if (part.block_sizes[j] <= 0)
            throw domain_error("empty block in partition");
        if (j && part.block_sizes[j] > part.block_sizes[j - 1])
            throw domain_error("block sizes must be non-increasing");
    }
    if (partition_value(g, part.counts) != part.value)
        throw domain_error("stored partition value is inconsistent");
}

VertexPartition canonical_partition(const MultipartiteGraph& g, std::vector<std::vector<int>> counts) {
    size_t m = counts.empty() ? 0 : counts[0].size();
    // work column-wise: (size, column vector)
    std::vector<std::pair<int, std::vector<int>>> columns(m);
    for (size_t j = 0; j < m; ++j) {
        std::vector<int> col(g.k);
        int size = 0;
        for (int i = 0; i < g.k; ++i) {
            col[i] = counts[i][j];
            size += col[i];
        }
        columns[j] = {size, std::move(col)};
    }
    std::sort(columns.begin(), columns.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second > b.second;
    });

    VertexPartition out;
    out.counts.assign(g.k, std::vector<int>(m, 0));
    out.block_sizes.resize(m);
    for (size_t j = 0; j < m; ++j) {
        out.block_sizes[j] = columns[j].first;
        for (int i = 0; i < g.k; ++i)
            out.counts[i][j] = columns[j].second[i];
    }
    out.value = partition_value(g, out.counts);
    return out;
}

bool preferred_certificate(const VertexPartition& a, const VertexPartition& b) {
    if (a.block_sizes != b.block_sizes)
        return a.block_sizes > b.block_sizes;
    // same sizes: prefer the smaller matrix, read block by block
    size_t m = a.block_sizes.size();
    for (size_t j = 0; j < m; ++j)
        for (size_t i = 0; i < a.counts.size(); ++i)
            if (a.counts[i][j] != b.counts[i][j])
                return a.counts[i][j] < b.counts[i][j];
    return false;
}

} // namespace antiramsey
