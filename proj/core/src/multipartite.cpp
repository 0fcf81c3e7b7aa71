#include "antiramsey/multipartite.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace antiramsey {

MultipartiteGraph build_graph(std::vector<int> part_sizes) {
    if (part_sizes.empty())
        throw domain_error("graph needs at least one part");
    for (int p : part_sizes)
        if (p <= 0)
            throw domain_error("part sizes must be positive");
    std::sort(part_sizes.begin(), part_sizes.end(), std::greater<int>());
    MultipartiteGraph g;
    g.parts = std::move(part_sizes);
    g.k = static_cast<int>(g.parts.size());
    g.n = std::accumulate(g.parts.begin(), g.parts.end(), 0);
    return g;
}

MultipartiteGraph parse_parts(const std::string& text) {
    std::vector<int> sizes;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            size_t used = 0;
            int value = std::stoi(token, &used);
            while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used])))
                ++used;
            if (used != token.size())
                throw domain_error("bad part list: '" + text + "'");
            sizes.push_back(value);
        } catch (const std::invalid_argument&) {
            throw domain_error("bad part list: '" + text + "'");
        } catch (const std::out_of_range&) {
            throw domain_error("bad part list: '" + text + "'");
        }
    }
    if (sizes.empty())
        throw domain_error("bad part list: '" + text + "'");
    return build_graph(std::move(sizes));
}

std::string format_parts(const MultipartiteGraph& g) {
    std::string out;
    for (size_t i = 0; i < g.parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(g.parts[i]);
    }
    return out;
}

VertexSelection make_selection(const MultipartiteGraph& g, std::vector<int> counts) {
    VertexSelection sel;
    sel.counts = std::move(counts);
    sel.r = std::accumulate(sel.counts.begin(), sel.counts.end(), 0);
    validate_selection(g, sel);
    return sel;
}

void validate_selection(const MultipartiteGraph& g, const VertexSelection& sel) {
    if (static_cast<int>(sel.counts.size()) != g.k)
        throw domain_error("selection has wrong number of parts");
    int total = 0;
    for (int i = 0; i < g.k; ++i) {
        if (sel.counts[i] < 0 || sel.counts[i] > g.parts[i])
            throw domain_error("selection count out of range for part " + std::to_string(i));
        total += sel.counts[i];
    }
    if (total != sel.r)
        throw domain_error("selection size does not match counts");
}

VertexSelection complement_selection(const MultipartiteGraph& g, const VertexSelection& sel) {
    validate_selection(g, sel);
    std::vector<int> counts(g.k);
    for (int i = 0; i < g.k; ++i)
        counts[i] = g.parts[i] - sel.counts[i];
    return make_selection(g, std::move(counts));
}

std::int64_t edge_count(const MultipartiteGraph& g) {
    std::int64_t sq = 0;
    for (int p : g.parts)
        sq += static_cast<std::int64_t>(p) * p;
    return (static_cast<std::int64_t>(g.n) * g.n - sq) / 2;
}

std::int64_t induced_edge_count(const MultipartiteGraph& g, const VertexSelection& sel) {
    validate_selection(g, sel);
    std::int64_t total = pairs(sel.r);
    for (int a : sel.counts)
        total -= pairs(a);
    return total;
}

std::int64_t boundary_edge_count(const MultipartiteGraph& g, const VertexSelection& sel) {
    return edge_count(g) - induced_edge_count(g, complement_selection(g, sel));
}

std::vector<MultipartiteGraph> enumerate_graphs(int max_n) {
    std::vector<MultipartiteGraph> out;
    std::vector<int> current;
    // descending-lexicographic partition enumeration with bounded largest part
    std::function<void(int, int)> emit = [&](int remaining, int bound) {
        if (remaining == 0) {
            if (current.size() >= 2)
                out.push_back(build_graph(current));
            return;
        }
        for (int next = std::min(remaining, bound); next >= 1; --next) {
            current.push_back(next);
            emit(remaining - next, next);
            current.pop_back();
        }
    };
    for (int n = 2; n <= max_n; ++n)
        emit(n, n);
    return out;
}

int vertex_index(const MultipartiteGraph& g, const Vertex& v) {
    if (v.part < 0 || v.part >= g.k || v.offset < 0 || v.offset >= g.parts[v.part])
        throw domain_error("vertex out of range");
    int base = 0;
    for (int i = 0; i < v.part; ++i)
        base += g.parts[i];
    return base + v.offset;
}

Vertex vertex_at(const MultipartiteGraph& g, int index) {
    if (index < 0 || index >= g.n)
        throw domain_error("vertex index out of range");
    int part = 0;
    while (index >= g.parts[part]) {
        index -= g.parts[part];
        ++part;
    }
    return Vertex{part, index};
}

std::vector<LabeledEdge> labeled_edges(const MultipartiteGraph& g) {
    std::vector<LabeledEdge> edges;
    edges.reserve(static_cast<size_t>(edge_count(g)));
    for (int i = 0; i < g.k; ++i)
        for (int a = 0; a < g.parts[i]; ++a)
            for (int j = i + 1; j < g.k; ++j)
                for (int b = 0; b < g.parts[j]; ++b)
                    edges.push_back(LabeledEdge{Vertex{i, a}, Vertex{j, b}});
    std::sort(edges.begin(), edges.end());
    return edges;
}

} // namespace antiramsey
