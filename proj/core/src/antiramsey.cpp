#include "antiramsey/antiramsey.hpp"

namespace antiramsey {

AntiRamseyResult anti_ramsey(const MultipartiteGraph& g, int q, const SolveOptions& options) {
    ExtremalResult inner = ellq(g, q, options);
    AntiRamseyResult result;
    result.value = inner.value + 1;
    result.ellq_value = inner.value;
    result.method = inner.method;
    result.certificate = std::move(inner.certificate);
    return result;
}

std::optional<std::int64_t> ar_large_gap_fastpath(const MultipartiteGraph& g, int q) {
    if (g.k < 2 || q < 2 || q > g.n - 1)
        return std::nullopt;
    std::int64_t n = g.n;
    std::int64_t p1 = g.parts[0];
    std::int64_t p2 = g.parts[1];
    if (5 * q < 4 * n - 2 || 5 * (p1 - p2) < n + 2)
        return std::nullopt;
    return edge_count(g) + 1 - (n - q + 1) * (n - p1);
}

Coloring witness_from_certificate(const MultipartiteGraph& g, const VertexPartition& certificate) {
    validate_partition(g, certificate);

    // place labeled vertices into blocks: part by part, blocks in certificate order
    std::vector<int> block_of(static_cast<size_t>(g.n));
    for (int i = 0; i < g.k; ++i) {
        int offset = 0;
        for (int j = 0; j < certificate.blocks(); ++j)
            for (int c = 0; c < certificate.counts[static_cast<size_t>(i)][static_cast<size_t>(j)]; ++c)
                block_of[static_cast<size_t>(vertex_index(g, Vertex{i, offset++}))] = j;
    }

    Coloring coloring;
    coloring.graph = g;
    std::vector<LabeledEdge> edges = labeled_edges(g);
    coloring.edge_color.resize(edges.size());
    int next_class = 2;
    for (size_t idx = 0; idx < edges.size(); ++idx) {
        int a = vertex_index(g, edges[idx].u);
        int b = vertex_index(g, edges[idx].v);
        bool internal = block_of[static_cast<size_t>(a)] == block_of[static_cast<size_t>(b)];
        coloring.edge_color[idx] = internal ? next_class++ : 1;
    }
    coloring.num_classes = next_class - 1;
    validate_coloring(coloring);
    return coloring;
}

Coloring witness_coloring(const MultipartiteGraph& g, int q, const SolveOptions& options) {
    AntiRamseyResult result = anti_ramsey(g, q, options);
    if (!result.certificate)
        throw std::logic_error("anti-Ramsey result carries no certificate");
    Coloring coloring = witness_from_certificate(g, *result.certificate);
    if (coloring.num_classes != result.value)
        throw std::logic_error("witness class count disagrees with the computed value");
    return coloring;
}

} // namespace antiramsey
