#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"

#include "antiramsey/greedy.hpp"
#include "antiramsey/oracle.hpp"

using namespace antiramsey;

namespace {

void for_all_selections(const MultipartiteGraph& g, int r,
                        const std::function<void(const VertexSelection&)>& fn) {
    std::vector<int> counts(static_cast<size_t>(g.k), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == g.k) {
            if (left == 0)
                fn(make_selection(g, counts));
            return;
        }
        int hi = std::min(left, g.parts[static_cast<size_t>(i)]);
        for (int x = 0; x <= hi; ++x) {
            counts[static_cast<size_t>(i)] = x;
            rec(i + 1, left - x);
        }
        counts[static_cast<size_t>(i)] = 0;
    };
    rec(0, r);
}

// reference rainbow-tree search: every q-subset of edges, checked directly
long long count_rainbow_trees(const Coloring& c, int q) {
    std::vector<LabeledEdge> edges = labeled_edges(c.graph);
    int m = static_cast<int>(edges.size());
    int n = c.graph.n;
    std::vector<std::pair<int, int>> ends;
    ends.reserve(edges.size());
    for (const LabeledEdge& e : edges)
        ends.emplace_back(vertex_index(c.graph, e.u), vertex_index(c.graph, e.v));

    std::vector<int> parent(static_cast<size_t>(n));
    std::function<int(int)> find = [&](int v) {
        while (parent[static_cast<size_t>(v)] != v)
            v = parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
        return v;
    };

    long long found = 0;
    std::vector<int> chosen;
    std::vector<bool> color_used(static_cast<size_t>(c.num_classes) + 1, false);
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(chosen.size()) == q) {
            std::set<int> verts;
            for (int e : chosen) {
                verts.insert(ends[static_cast<size_t>(e)].first);
                verts.insert(ends[static_cast<size_t>(e)].second);
            }
            if (static_cast<int>(verts.size()) != q + 1)
                return;
            std::iota(parent.begin(), parent.end(), 0);
            for (int e : chosen) {
                int a = find(ends[static_cast<size_t>(e)].first);
                int b = find(ends[static_cast<size_t>(e)].second);
                if (a == b)
                    return; // cycle
                parent[static_cast<size_t>(a)] = b;
            }
            ++found;
            return;
        }
        int need = q - static_cast<int>(chosen.size());
        for (int e = from; e + need <= m; ++e) {
            int color = c.edge_color[static_cast<size_t>(e)];
            if (color_used[static_cast<size_t>(color)])
                continue;
            color_used[static_cast<size_t>(color)] = true;
            chosen.push_back(e);
            rec(e + 1);
            chosen.pop_back();
            color_used[static_cast<size_t>(color)] = false;
        }
    };
    rec(0);
    return found;
}

void check_tree_shape(const Coloring& c, const RainbowTree& tree, int q) {
    REQUIRE(tree.edges.size() == static_cast<size_t>(q));
    REQUIRE(tree.colors.size() == static_cast<size_t>(q));
    CHECK(std::is_sorted(tree.edges.begin(), tree.edges.end()));
    CHECK(std::adjacent_find(tree.edges.begin(), tree.edges.end()) == tree.edges.end());

    std::vector<LabeledEdge> all = labeled_edges(c.graph);
    std::set<int> colors;
    std::set<int> verts;
    std::vector<int> parent(static_cast<size_t>(c.graph.n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[static_cast<size_t>(v)] != v)
            v = parent[static_cast<size_t>(v)];
        return v;
    };
    for (size_t i = 0; i < tree.edges.size(); ++i) {
        auto at = std::lower_bound(all.begin(), all.end(), tree.edges[i]);
        REQUIRE(at != all.end());
        REQUIRE(*at == tree.edges[i]);
        size_t idx = static_cast<size_t>(at - all.begin());
        CHECK(tree.colors[i] == c.edge_color[idx]);
        CHECK(colors.insert(tree.colors[i]).second); // pairwise distinct
        int a = vertex_index(c.graph, tree.edges[i].u);
        int b = vertex_index(c.graph, tree.edges[i].v);
        verts.insert(a);
        verts.insert(b);
        int ra = find(a), rb = find(b);
        CHECK(ra != rb); // acyclic
        parent[static_cast<size_t>(ra)] = rb;
    }
    CHECK(static_cast<int>(verts.size()) == q + 1);
}

Coloring uniform_coloring(const MultipartiteGraph& g, int classes) {
    Coloring c;
    c.graph = g;
    c.edge_color.assign(labeled_edges(g).size(), 0);
    for (size_t i = 0; i < c.edge_color.size(); ++i)
        c.edge_color[i] = static_cast<int>(i % static_cast<size_t>(classes)) + 1;
    c.num_classes = classes;
    validate_coloring(c);
    return c;
}

Coloring random_coloring(const MultipartiteGraph& g, std::mt19937& rng) {
    size_t m = labeled_edges(g).size();
    std::uniform_int_distribution<int> pick(1, static_cast<int>(m));
    int target = pick(rng);
    Coloring c;
    c.graph = g;
    c.edge_color.assign(m, 0);
    std::vector<int> relabel(static_cast<size_t>(target) + 1, 0);
    int used = 0;
    std::uniform_int_distribution<int> color(1, target);
    for (size_t i = 0; i < m; ++i) {
        int raw = color(rng);
        if (relabel[static_cast<size_t>(raw)] == 0)
            relabel[static_cast<size_t>(raw)] = ++used;
        c.edge_color[i] = relabel[static_cast<size_t>(raw)];
    }
    c.num_classes = used;
    validate_coloring(c);
    return c;
}

} // namespace

TEST_CASE("partition oracle on explicit instances") {
    OracleEllqResult r = oracle_ellq(build_graph({3, 3, 3}), 6);
    CHECK(r.value == 9);
    CHECK(r.certificate.block_sizes == std::vector<int>{3, 3, 3});

    CHECK(oracle_ellq(build_graph({3, 3}), 4).value == 3);
    CHECK(oracle_ellq(build_graph({2, 2, 2}), 4).value == 3);
    CHECK(oracle_ellq(build_graph({2, 1}), 2).value == 0);

    CHECK_THROWS_AS(oracle_ellq(build_graph({4}), 2), domain_error);
    CHECK_THROWS_AS(oracle_ellq(build_graph({2, 2}), 1), domain_error);
    CHECK_THROWS_AS(oracle_ellq(build_graph({2, 2}), 4), domain_error);
}

TEST_CASE("partition oracle certificates are feasible and canonical") {
    for (const MultipartiteGraph& g : enumerate_graphs(6)) {
        for (int q = 2; q <= g.n - 1; ++q) {
            OracleEllqResult r = oracle_ellq(g, q);
            validate_partition(g, r.certificate);
            CHECK(r.certificate.value == r.value);
            CHECK(r.certificate.blocks() >= 2);
            CHECK(r.certificate.block_sizes[0] +
                      (r.certificate.blocks() > 1 ? r.certificate.block_sizes[1] : 0) <=
                  q);
            // already in canonical column order
            VertexPartition again = canonical_partition(g, r.certificate.counts);
            CHECK(again.counts == r.certificate.counts);
        }
    }
}

TEST_CASE("boundary oracle on explicit instances") {
    CHECK(oracle_min_boundary(build_graph({4, 3, 1}), 3) == 11);
    CHECK(oracle_min_boundary(build_graph({2, 2}), 1) == 2);
    CHECK(oracle_min_boundary(build_graph({3, 2}), 5) == 6);
    CHECK(oracle_min_boundary(build_graph({3, 1}), 1) == 1);

    CHECK_THROWS_AS(oracle_min_boundary(build_graph({2, 2}), 0), domain_error);
    CHECK_THROWS_AS(oracle_min_boundary(build_graph({2, 2}), 5), domain_error);
}

TEST_CASE("boundary oracle equals the counts-based minimum") {
    for (const MultipartiteGraph& g : enumerate_graphs(7)) {
        for (int r = 1; r <= g.n; ++r) {
            std::int64_t by_counts = -1;
            for_all_selections(g, r, [&](const VertexSelection& sel) {
                std::int64_t b = boundary_edge_count(g, sel);
                if (by_counts < 0 || b < by_counts)
                    by_counts = b;
            });
            CHECK(oracle_min_boundary(g, r) == by_counts);
        }
    }
}

TEST_CASE("rainbow tree search on handmade colorings") {
    MultipartiteGraph g33 = build_graph({3, 3});
    Coloring mono = uniform_coloring(g33, 1);
    CHECK(find_rainbow_tree(mono, 1).has_value()); // single edge
    CHECK(!find_rainbow_tree(mono, 2).has_value());
    CHECK(!find_rainbow_tree(mono, 5).has_value());

    // all colors distinct: a tree of any feasible size exists
    MultipartiteGraph g22 = build_graph({2, 2});
    Coloring distinct = uniform_coloring(g22, 4);
    for (int q = 1; q <= 3; ++q) {
        auto tree = find_rainbow_tree(distinct, q);
        REQUIRE(tree.has_value());
        check_tree_shape(distinct, *tree, q);
    }
    // the four-cycle has exactly four spanning trees
    CHECK(count_rainbow_trees(distinct, 3) == 4);

    // complete graph on four vertices: sixteen spanning trees
    Coloring k4 = uniform_coloring(build_graph({1, 1, 1, 1}), 6);
    CHECK(count_rainbow_trees(k4, 3) == 16);
    CHECK(find_rainbow_tree(k4, 3).has_value());

    CHECK_THROWS_AS(find_rainbow_tree(mono, 0), domain_error);
    CHECK_THROWS_AS(find_rainbow_tree(mono, 6), domain_error);
    Coloring broken = mono;
    broken.edge_color.pop_back();
    CHECK_THROWS_AS(find_rainbow_tree(broken, 2), domain_error);
}

TEST_CASE("rainbow tree search agrees with subset enumeration") {
    std::mt19937 rng(20240817);
    for (const char* parts : {"2,2", "3,2", "2,2,1", "3,3", "2,1,1", "1,1,1,1"}) {
        MultipartiteGraph g = parse_parts(parts);
        for (int trial = 0; trial < 30; ++trial) {
            Coloring c = random_coloring(g, rng);
            for (int q = 1; q <= g.n - 1; ++q) {
                CAPTURE(parts);
                CAPTURE(trial);
                CAPTURE(q);
                auto tree = find_rainbow_tree(c, q);
                CHECK(tree.has_value() == (count_rainbow_trees(c, q) > 0));
                if (tree)
                    check_tree_shape(c, *tree, q);
            }
        }
    }
}

TEST_CASE("coloring oracle on explicit instances") {
    OracleArResult r = oracle_ar(build_graph({2, 1}), 2);
    CHECK(r.value == 1);

    r = oracle_ar(build_graph({2, 2}), 3);
    CHECK(r.value == 2);

    r = oracle_ar(build_graph({2, 2, 2}), 4);
    CHECK(r.value == 4);

    CHECK_THROWS_AS(oracle_ar(build_graph({2, 2}), 1), domain_error);
    CHECK_THROWS_AS(oracle_ar(build_graph({2, 2}), 4), domain_error);
}

TEST_CASE("coloring oracle witnesses are rainbow-free at the stated class count") {
    for (const MultipartiteGraph& g : enumerate_graphs(5)) {
        if (edge_count(g) > kDefaultOracleMaxEdges)
            continue;
        for (int q = 2; q <= g.n - 1; ++q) {
            OracleArResult r = oracle_ar(g, q);
            validate_coloring(r.witness);
            CHECK(r.witness.num_classes == r.value);
            CHECK(!find_rainbow_tree(r.witness, q).has_value());
            CHECK(count_rainbow_trees(r.witness, q) == 0);
        }
    }
}

TEST_CASE("induced-subgraph oracle on explicit instances") {
    InducedMaxResult r = max_induced_subgraph(build_graph({4, 3, 1}), 5);
    CHECK(r.value == 8);
    CHECK(r.shapes == std::vector<std::vector<int>>{{2, 2, 1}});

    r = max_induced_subgraph(build_graph({3, 2}), 5);
    CHECK(r.value == 6);
    CHECK(r.shapes == std::vector<std::vector<int>>{{3, 2}});

    r = max_induced_subgraph(build_graph({2, 2}), 1);
    CHECK(r.value == 0);
    CHECK(r.shapes == std::vector<std::vector<int>>{{0, 1}, {1, 0}});

    CHECK_THROWS_AS(max_induced_subgraph(build_graph({2, 2}), 0), domain_error);
    CHECK_THROWS_AS(max_induced_subgraph(build_graph({2, 2}), 5), domain_error);
}

TEST_CASE("induced-subgraph oracle equals the counts-based maximum") {
    for (const MultipartiteGraph& g : enumerate_graphs(7)) {
        for (int b = 1; b <= g.n; ++b) {
            std::int64_t by_counts = -1;
            for_all_selections(g, b, [&](const VertexSelection& sel) {
                by_counts = std::max(by_counts, induced_edge_count(g, sel));
            });
            CHECK(max_induced_subgraph(g, b).value == by_counts);
        }
    }
}

TEST_CASE("minimum-boundary selections: greedy test, oracle, and complement agree") {
    for (const MultipartiteGraph& g : enumerate_graphs(7)) {
        for (int r = 1; r <= g.n; ++r) {
            std::int64_t least = oracle_min_boundary(g, r);
            std::int64_t best_outside =
                (r == g.n) ? 0 : max_induced_subgraph(g, g.n - r).value;
            for_all_selections(g, r, [&](const VertexSelection& sel) {
                bool minimal = boundary_edge_count(g, sel) == least;
                bool structural = is_min_selection(g, sel);
                bool complement_max =
                    induced_edge_count(g, complement_selection(g, sel)) == best_outside;
                CHECK(minimal == structural);
                CHECK(minimal == complement_max);
            });
        }
    }
}

TEST_CASE("oracle size caps are hard errors") {
    MultipartiteGraph big = build_graph({6, 6});
    CHECK_THROWS_AS(oracle_ellq(big, 4), resource_error);
    CHECK_THROWS_AS(oracle_min_boundary(big, 3), resource_error);
    CHECK_THROWS_AS(max_induced_subgraph(big, 3), resource_error);
    CHECK_THROWS_AS(oracle_ar(build_graph({4, 4}), 3), resource_error);

    // explicit caps bite even on small graphs
    MultipartiteGraph small = build_graph({2, 2});
    CHECK_THROWS_AS(oracle_ellq(small, 3, 3), resource_error);
    CHECK_THROWS_AS(oracle_min_boundary(small, 2, 3), resource_error);
    CHECK_THROWS_AS(oracle_ar(small, 3, 3), resource_error);
    CHECK_THROWS_AS(max_induced_subgraph(small, 2, 3), resource_error);

    // a raised cap admits the same graph
    CHECK(oracle_ellq(big, 4, 12).value > 0);
}
