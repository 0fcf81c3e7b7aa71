#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "antiramsey/errors.hpp"

namespace antiramsey {

// Complete multipartite graph K_{p_1,...,p_k}.  Parts are kept in canonical
// non-increasing order; vertices inside a part are interchangeable, so most
// operations work on per-part counts instead of labeled vertex sets.
struct MultipartiteGraph {
    std::vector<int> parts; // non-increasing, all >= 1
    int n = 0;              // total vertex count
    int k = 0;              // number of parts
};

// Labeled vertex: offset-th vertex of part `part` (both 0-based).
struct Vertex {
    int part = 0;
    int offset = 0;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

// Labeled edge with endpoints in canonical order (u < v, different parts).
struct LabeledEdge {
    Vertex u;
    Vertex v;
    friend auto operator<=>(const LabeledEdge&, const LabeledEdge&) = default;
};

// Vertex selection up to exchangeability: counts[i] vertices taken from part i.
struct VertexSelection {
    std::vector<int> counts;
    int r = 0; // sum of counts
};

// Sorts sizes non-increasingly and validates them (every size >= 1).
// A single part is accepted here; operations that need k >= 2 reject it.
MultipartiteGraph build_graph(std::vector<int> part_sizes);

// Parses the text form "p1,p2,..." (order-insensitive, canonicalized).
MultipartiteGraph parse_parts(const std::string& text);
std::string format_parts(const MultipartiteGraph& g);

// Builds a selection from per-part counts, validating 0 <= counts[i] <= p_i.
VertexSelection make_selection(const MultipartiteGraph& g, std::vector<int> counts);
void validate_selection(const MultipartiteGraph& g, const VertexSelection& sel);
VertexSelection complement_selection(const MultipartiteGraph& g, const VertexSelection& sel);

// |E(G)| = sum_{i<j} p_i p_j.
std::int64_t edge_count(const MultipartiteGraph& g);

// Edges with both endpoints in the selection: C(r,2) - sum_i C(a_i,2).
std::int64_t induced_edge_count(const MultipartiteGraph& g, const VertexSelection& sel);

// Edges with at least one endpoint in the selection, via the complement
// identity |E_G(S)| = |E(G)| - |E(G[V \ S])|.
std::int64_t boundary_edge_count(const MultipartiteGraph& g, const VertexSelection& sel);

// Every multipartite graph with k >= 2 and n <= max_n, one per multiset of
// part sizes: n ascending, parts in descending lexicographic order within n.
std::vector<MultipartiteGraph> enumerate_graphs(int max_n);

// Labeled view used by the brute-force oracles and colorings.
int vertex_index(const MultipartiteGraph& g, const Vertex& v);
Vertex vertex_at(const MultipartiteGraph& g, int index);
// All edges in canonical order (sorted by endpoint pair).
std::vector<LabeledEdge> labeled_edges(const MultipartiteGraph& g);

inline std::int64_t pairs(std::int64_t x) { return x * (x - 1) / 2; }

} // namespace antiramsey
