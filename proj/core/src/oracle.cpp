#include "antiramsey/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace antiramsey {

namespace {

void require_oracle_graph(const MultipartiteGraph& g) {
    if (g.k < 2)
        throw domain_error("need at least two parts");
}

void check_n_cap(const MultipartiteGraph& g, int max_n) {
    if (g.n > max_n)
        throw resource_error("graph exceeds the oracle vertex cap (n = " + std::to_string(g.n) +
                             ", cap " + std::to_string(max_n) + ")");
}

std::vector<int> part_of_vertex(const MultipartiteGraph& g) {
    std::vector<int> part(static_cast<size_t>(g.n));
    for (int v = 0; v < g.n; ++v)
        part[static_cast<size_t>(v)] = vertex_at(g, v).part;
    return part;
}

} // namespace

OracleEllqResult oracle_ellq(const MultipartiteGraph& g, int q, int max_n) {
    require_oracle_graph(g);
    if (q < 2 || q > g.n - 1)
        throw domain_error("q must satisfy 2 <= q <= n-1");
    check_n_cap(g, max_n);

    std::vector<int> part = part_of_vertex(g);
    int n = g.n;

    // restricted-growth assignment of vertices to blocks
    std::vector<int> block_of(static_cast<size_t>(n), 0);
    std::vector<int> block_size(static_cast<size_t>(n) + 1, 0);
    std::vector<std::vector<int>> block_part(static_cast<size_t>(n) + 1,
                                             std::vector<int>(static_cast<size_t>(g.k), 0));

    bool found = false;
    std::int64_t best = 0;
    VertexPartition best_cert;

    auto consider = [&](int used_blocks, std::int64_t value) {
        std::vector<std::vector<int>> counts(static_cast<size_t>(g.k),
                                             std::vector<int>(static_cast<size_t>(used_blocks), 0));
        for (int b = 0; b < used_blocks; ++b)
            for (int i = 0; i < g.k; ++i)
                counts[static_cast<size_t>(i)][static_cast<size_t>(b)] = block_part[static_cast<size_t>(b)][static_cast<size_t>(i)];
        VertexPartition cert = canonical_partition(g, counts);
        if (!found || value > best || (value == best && preferred_certificate(cert, best_cert))) {
            found = true;
            best = value;
            best_cert = std::move(cert);
        }
    };

    // top-two block sizes can only grow while vertices are being placed
    auto top_two_ok = [&](int used_blocks) {
        int first = 0, second = 0;
        for (int b = 0; b < used_blocks; ++b) {
            int s = block_size[static_cast<size_t>(b)];
            if (s > first) {
                second = first;
                first = s;
            } else if (s > second) {
                second = s;
            }
        }
        return first + second <= q;
    };

    std::function<void(int, int, std::int64_t)> place = [&](int v, int used_blocks, std::int64_t value) {
        if (v == n) {
            if (used_blocks >= 2)
                consider(used_blocks, value);
            return;
        }
        int limit = std::min(used_blocks, n - 1); // new block allowed while short of n blocks
        for (int b = 0; b <= limit; ++b) {
            int gain = block_size[static_cast<size_t>(b)] - block_part[static_cast<size_t>(b)][static_cast<size_t>(part[static_cast<size_t>(v)])];
            ++block_size[static_cast<size_t>(b)];
            ++block_part[static_cast<size_t>(b)][static_cast<size_t>(part[static_cast<size_t>(v)])];
            int next_used = std::max(used_blocks, b + 1);
            if (top_two_ok(next_used))
                place(v + 1, next_used, value + gain);
            --block_size[static_cast<size_t>(b)];
            --block_part[static_cast<size_t>(b)][static_cast<size_t>(part[static_cast<size_t>(v)])];
        }
    };
    place(0, 0, 0);

    if (!found)
        throw std::logic_error("no feasible vertex partition found");
    return OracleEllqResult{best, std::move(best_cert)};
}

std::int64_t oracle_min_boundary(const MultipartiteGraph& g, int r, int max_n) {
    require_oracle_graph(g);
    if (r < 1 || r > g.n)
        throw domain_error("selection size out of range");
    check_n_cap(g, max_n);

    std::vector<LabeledEdge> edges = labeled_edges(g);
    std::vector<std::pair<int, int>> by_index;
    by_index.reserve(edges.size());
    for (const LabeledEdge& e : edges)
        by_index.emplace_back(vertex_index(g, e.u), vertex_index(g, e.v));

    int n = g.n;
    std::int64_t best = -1;
    std::vector<bool> in(static_cast<size_t>(n), false);
    std::vector<int> chosen;
    std::function<void(int)> pick = [&](int from) {
        if (static_cast<int>(chosen.size()) == r) {
            std::int64_t touched = 0;
            for (const auto& [a, b] : by_index)
                if (in[static_cast<size_t>(a)] || in[static_cast<size_t>(b)])
                    ++touched;
            if (best < 0 || touched < best)
                best = touched;
            return;
        }
        int need = r - static_cast<int>(chosen.size());
        for (int v = from; v + need <= n; ++v) {
            in[static_cast<size_t>(v)] = true;
            chosen.push_back(v);
            pick(v + 1);
            chosen.pop_back();
            in[static_cast<size_t>(v)] = false;
        }
    };
    pick(0);
    return best;
}

namespace {

struct TreeSearch {
    const Coloring& coloring;
    int q;
    int n;
    std::vector<std::pair<int, int>> edge_ends; // by canonical edge index
    std::vector<std::vector<int>> incident;     // vertex -> edge indices, ascending
    std::vector<bool> color_used;
    std::vector<bool> banned;
    std::vector<bool> in_tree;
    std::vector<int> tree_edges;

    explicit TreeSearch(const Coloring& c, int target)
        : coloring(c), q(target), n(c.graph.n) {
        std::vector<LabeledEdge> edges = labeled_edges(c.graph);
        edge_ends.reserve(edges.size());
        incident.assign(static_cast<size_t>(n), {});
        for (size_t idx = 0; idx < edges.size(); ++idx) {
            int a = vertex_index(c.graph, edges[idx].u);
            int b = vertex_index(c.graph, edges[idx].v);
            edge_ends.emplace_back(a, b);
            incident[static_cast<size_t>(a)].push_back(static_cast<int>(idx));
            incident[static_cast<size_t>(b)].push_back(static_cast<int>(idx));
        }
        color_used.assign(static_cast<size_t>(c.num_classes) + 1, false);
        banned.assign(edge_ends.size(), false);
        in_tree.assign(static_cast<size_t>(n), false);
    }

    // extension edges: exactly one endpoint inside the tree, the other > root
    void collect_extensions(int root, std::vector<int>& out) const {
        out.clear();
        for (int v = 0; v < n; ++v) {
            if (!in_tree[static_cast<size_t>(v)]) continue;
            for (int e : incident[static_cast<size_t>(v)]) {
                const auto& [a, b] = edge_ends[static_cast<size_t>(e)];
                int other = (a == v) ? b : a;
                if (other <= root || in_tree[static_cast<size_t>(other)]) continue;
                out.push_back(e);
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }

    bool grow(int root) {
        if (static_cast<int>(tree_edges.size()) == q)
            return true;
        std::vector<int> candidates;
        collect_extensions(root, candidates);
        std::vector<int> newly_banned;
        bool hit = false;
        for (int e : candidates) {
            if (banned[static_cast<size_t>(e)]) continue;
            int color = coloring.edge_color[static_cast<size_t>(e)];
            if (!color_used[static_cast<size_t>(color)]) {
                const auto& [a, b] = edge_ends[static_cast<size_t>(e)];
                int fresh = in_tree[static_cast<size_t>(a)] ? b : a;
                in_tree[static_cast<size_t>(fresh)] = true;
                tree_edges.push_back(e);
                color_used[static_cast<size_t>(color)] = true;
                hit = grow(root);
                color_used[static_cast<size_t>(color)] = false;
                if (hit) return true; // keep the found tree on the stacks
                tree_edges.pop_back();
                in_tree[static_cast<size_t>(fresh)] = false;
            }
            banned[static_cast<size_t>(e)] = true;
            newly_banned.push_back(e);
        }
        for (int e : newly_banned)
            banned[static_cast<size_t>(e)] = false;
        return false;
    }

    std::optional<RainbowTree> search() {
        std::vector<LabeledEdge> all = labeled_edges(coloring.graph);
        for (int root = 0; root < n; ++root) {
            in_tree.assign(static_cast<size_t>(n), false);
            in_tree[static_cast<size_t>(root)] = true;
            tree_edges.clear();
            if (grow(root)) {
                std::sort(tree_edges.begin(), tree_edges.end());
                RainbowTree tree;
                for (int e : tree_edges) {
                    tree.edges.push_back(all[static_cast<size_t>(e)]);
                    tree.colors.push_back(coloring.edge_color[static_cast<size_t>(e)]);
                }
                return tree;
            }
        }
        return std::nullopt;
    }
};

} // namespace

std::optional<RainbowTree> find_rainbow_tree(const Coloring& coloring, int q) {
    validate_coloring(coloring);
    if (q < 1 || q > coloring.graph.n - 1)
        throw domain_error("tree size must satisfy 1 <= q <= n-1");
    TreeSearch search(coloring, q);
    return search.search();
}

OracleArResult oracle_ar(const MultipartiteGraph& g, int q, std::int64_t max_edges) {
    require_oracle_graph(g);
    if (q < 2 || q > g.n - 1)
        throw domain_error("q must satisfy 2 <= q <= n-1");
    std::int64_t edges = edge_count(g);
    if (edges > max_edges)
        throw resource_error("graph exceeds the oracle edge cap (|E| = " + std::to_string(edges) +
                             ", cap " + std::to_string(max_edges) + ")");

    int m = static_cast<int>(edges);
    Coloring coloring;
    coloring.graph = g;
    coloring.edge_color.assign(static_cast<size_t>(m), 0);

    // restricted-growth enumeration of edge partitions with exactly t classes
    std::function<bool(int, int, int)> assign = [&](int e, int used, int t) -> bool {
        if (used + (m - e) < t)
            return false; // cannot reach t classes any more
        if (e == m) {
            coloring.num_classes = t;
            return !find_rainbow_tree(coloring, q).has_value();
        }
        int limit = std::min(used, t - 1);
        for (int c = 0; c <= limit; ++c) {
            coloring.edge_color[static_cast<size_t>(e)] = c + 1;
            if (assign(e + 1, std::max(used, c + 1), t))
                return true;
        }
        return false;
    };

    for (int t = m; t >= 1; --t) {
        if (assign(0, 0, t)) {
            validate_coloring(coloring);
            return OracleArResult{t, coloring};
        }
    }
    throw std::logic_error("no rainbow-free coloring found at any class count");
}

InducedMaxResult max_induced_subgraph(const MultipartiteGraph& g, int b, int max_n) {
    require_oracle_graph(g);
    if (b < 1 || b > g.n)
        throw domain_error("subset size out of range");
    check_n_cap(g, max_n);

    std::vector<int> part = part_of_vertex(g);
    int n = g.n;
    std::int64_t best = -1;
    std::set<std::vector<int>> shapes;

    std::vector<int> shape(static_cast<size_t>(g.k), 0);
    std::function<void(int, int, std::int64_t)> pick = [&](int v, int taken, std::int64_t value) {
        if (taken == b) {
            if (value > best) {
                best = value;
                shapes.clear();
            }
            if (value == best)
                shapes.insert(shape);
            return;
        }
        if (v == n || n - v < b - taken)
            return;
        // take v: it connects to everything chosen outside its own part
        int p = part[static_cast<size_t>(v)];
        ++shape[static_cast<size_t>(p)];
        pick(v + 1, taken + 1, value + taken - (shape[static_cast<size_t>(p)] - 1));
        --shape[static_cast<size_t>(p)];
        pick(v + 1, taken, value);
    };
    pick(0, 0, 0);

    InducedMaxResult out;
    out.value = best;
    out.shapes.assign(shapes.begin(), shapes.end());
    return out;
}

} // namespace antiramsey
