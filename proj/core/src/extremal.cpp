#include "antiramsey/extremal.hpp"

#include <algorithm>
#include <set>

#include "antiramsey/greedy.hpp"
#include "antiramsey/oracle.hpp"

namespace antiramsey {

namespace {

void require_query(const MultipartiteGraph& g, int q) {
    if (g.k < 2)
        throw domain_error("need at least two parts");
    if (q < 2 || q > g.n - 1)
        throw domain_error("q must satisfy 2 <= q <= n-1");
}

} // namespace

std::vector<ComponentSizeSequence> candidate_sequences(int n, int q) {
    if (n < 3 || q < 2 || q > n - 1)
        throw domain_error("need n >= 3 and 2 <= q <= n-1");

    std::vector<ComponentSizeSequence> out;
    std::set<std::vector<int>> seen;
    auto emit = [&](std::vector<int> sizes) {
        if (seen.insert(sizes).second)
            out.push_back(ComponentSizeSequence{std::move(sizes)});
    };

    int rest = n - q; // vertices outside the two largest components
    for (int h2 = std::min(q / 2, rest); h2 >= 1; --h2) {
        int h1 = q - h2;

        // run of h2-blocks closed by one tail block of size 1..h2
        int t = (rest + h2 - 1) / h2;
        int h3 = rest - (t - 1) * h2;
        if (t >= 1 && (t > 1 || h3 == h2)) {
            std::vector<int> sizes;
            sizes.push_back(h1);
            sizes.insert(sizes.end(), static_cast<size_t>(t), h2);
            sizes.push_back(h3);
            emit(std::move(sizes));
        }

        // run of h2-blocks closed by two or more singletons
        if (h2 >= 2) {
            for (int t1 = (rest - 2) / h2 + 1; t1 >= 2; --t1) {
                int t2 = rest - (t1 - 1) * h2;
                if (t2 < 2) continue;
                std::vector<int> sizes;
                sizes.push_back(h1);
                sizes.insert(sizes.end(), static_cast<size_t>(t1), h2);
                sizes.insert(sizes.end(), static_cast<size_t>(t2), 1);
                emit(std::move(sizes));
            }
        }
    }
    return out;
}

namespace {

// min of sum C(x_i,2) with sum x_i = amount and x_i <= caps[i]: fill all
// rows to a common level, then drop the excess by single units.
std::int64_t balanced_fill_cost(std::int64_t amount, const std::vector<int>& caps) {
    if (amount == 0) return 0;
    std::int64_t level = 0, reach = 0;
    std::int64_t at_level = 0; // rows not capped below the current level
    while (reach < amount) {
        ++level;
        at_level = 0;
        reach = 0;
        for (int c : caps) {
            reach += std::min<std::int64_t>(c, level);
            if (c >= level) ++at_level;
        }
        if (at_level == 0)
            throw domain_error("block larger than the whole graph");
    }
    std::int64_t cost = 0;
    for (int c : caps)
        cost += pairs(std::min<std::int64_t>(c, level));
    // move (reach - amount) units from level to level-1
    return cost - (reach - amount) * (level - 1);
}

struct AssignmentSearch {
    const MultipartiteGraph& g;
    const std::vector<int>& sizes;
    std::int64_t node_budget;
    std::int64_t nodes = 0;

    int k;
    int m;
    std::vector<int> rem;                   // remaining row capacities
    std::vector<std::int64_t> rem_total_suffix; // sum of sizes[j..]
    std::vector<std::vector<int>> fills;    // fills[j] = column j
    std::int64_t best_cost;
    std::vector<std::vector<int>> best_fills;
    bool have_matrix = false;

    AssignmentSearch(const MultipartiteGraph& graph, const std::vector<int>& block_sizes,
                     std::int64_t budget)
        : g(graph), sizes(block_sizes), node_budget(budget), k(graph.k),
          m(static_cast<int>(block_sizes.size())) {}

    void tick() {
        if (++nodes > node_budget)
            throw resource_error("assignment search exceeded the node budget");
    }

    std::int64_t remaining_bound(int from_col) const {
        std::int64_t bound = 0;
        for (int j = from_col; j < m; ++j)
            bound += balanced_fill_cost(sizes[j], rem);
        return bound;
    }

    std::int64_t greedy_cost() {
        std::vector<int> caps = g.parts;
        std::int64_t cost = 0;
        for (int j = 0; j < m; ++j) {
            // commit one balanced fill per column, largest blocks first
            std::int64_t amount = sizes[j];
            std::int64_t level = 0, reach = 0;
            while (reach < amount) {
                ++level;
                reach = 0;
                for (int c : caps)
                    reach += std::min<std::int64_t>(c, level);
            }
            std::int64_t excess = reach - amount;
            for (size_t i = 0; i < caps.size(); ++i) {
                int x = static_cast<int>(std::min<std::int64_t>(caps[i], level));
                if (excess > 0 && x == level) {
                    --x;
                    --excess;
                }
                cost += pairs(x);
                caps[i] -= x;
            }
        }
        return cost;
    }

    void column(int j, std::int64_t cost_so_far) {
        if (j == m) {
            if (cost_so_far < best_cost || (cost_so_far == best_cost && !have_matrix)) {
                best_cost = cost_so_far;
                best_fills = fills;
                have_matrix = true;
            }
            return;
        }
        if (cost_so_far + remaining_bound(j) > best_cost)
            return;
        const std::vector<int>* floor_fill =
            (j > 0 && sizes[j] == sizes[j - 1]) ? &fills[j - 1] : nullptr;
        fills[j].assign(static_cast<size_t>(k), 0);
        row(j, 0, sizes[j], cost_so_far, floor_fill != nullptr, floor_fill);
    }

    // enumerate column j in lexicographic order; when `tight`, the column must
    // stay >= the previous equal-size column
    void row(int j, int i, int need, std::int64_t cost_so_far, bool tight,
             const std::vector<int>* floor_fill) {
        tick();
        if (i == k) {
            if (need == 0) {
                for (int x : fills[j])
                    cost_so_far += pairs(x);
                for (int r = 0; r < k; ++r)
                    rem[r] -= fills[j][r];
                column(j + 1, cost_so_far);
                for (int r = 0; r < k; ++r)
                    rem[r] += fills[j][r];
            }
            return;
        }
        int tail_cap = 0;
        for (int r = i + 1; r < k; ++r)
            tail_cap += rem[r];
        int lo = std::max(0, need - tail_cap);
        if (tight) lo = std::max(lo, (*floor_fill)[i]);
        int hi = std::min(rem[i], need);
        for (int x = lo; x <= hi; ++x) {
            fills[j][i] = x;
            bool still_tight = tight && x == (*floor_fill)[i];
            row(j, i + 1, need - x, cost_so_far, still_tight, floor_fill);
            fills[j][i] = 0;
        }
    }

    VertexPartition run() {
        rem = g.parts;
        fills.assign(static_cast<size_t>(m), {});
        best_cost = greedy_cost();
        column(0, 0);
        std::vector<std::vector<int>> counts(static_cast<size_t>(k),
                                             std::vector<int>(static_cast<size_t>(m), 0));
        for (int j = 0; j < m; ++j)
            for (int i = 0; i < k; ++i)
                counts[static_cast<size_t>(i)][static_cast<size_t>(j)] = best_fills[j][i];
        VertexPartition out;
        out.counts = std::move(counts);
        out.block_sizes = sizes;
        out.value = partition_value(g, out.counts);
        return out;
    }
};

} // namespace

VertexPartition best_assignment(const MultipartiteGraph& g, const ComponentSizeSequence& sizes,
                                std::int64_t node_budget) {
    validate_sequence(sizes);
    std::int64_t total = 0;
    for (int s : sizes.sizes)
        total += s;
    if (total != g.n)
        throw domain_error("block sizes must sum to the vertex count");
    AssignmentSearch search(g, sizes.sizes, node_budget);
    return search.run();
}

std::optional<std::int64_t> exceptional_lookup(const MultipartiteGraph& g, int q) {
    static const std::vector<int> k33{3, 3}, k43{4, 3}, k333{3, 3, 3};
    if (q == 4 && (g.parts == k33 || g.parts == k43))
        return 3;
    if (q == 6 && g.parts == k333)
        return 9;
    return std::nullopt;
}

std::string_view method_name(Method m) {
    switch (m) {
    case Method::exceptional: return "exceptional";
    case Method::closed_form_small_gap: return "closed-form-small-gap";
    case Method::closed_form_large_gap: return "closed-form-large-gap";
    case Method::sequence_solver: return "sequence-solver";
    case Method::oracle: return "oracle";
    }
    return "unknown";
}

std::optional<SolveMethod> parse_solve_method(std::string_view name) {
    if (name == "auto") return SolveMethod::automatic;
    if (name == "closed-form") return SolveMethod::closed_form;
    if (name == "sequence-solver") return SolveMethod::sequence_solver;
    if (name == "oracle") return SolveMethod::oracle;
    return std::nullopt;
}

namespace {

ExtremalResult solve_by_sequences(const MultipartiteGraph& g, int q, std::int64_t node_budget) {
    ExtremalResult result;
    result.method = Method::sequence_solver;
    bool first = true;
    for (const ComponentSizeSequence& seq : candidate_sequences(g.n, q)) {
        VertexPartition part = best_assignment(g, seq, node_budget);
        if (first || part.value > result.value ||
            (part.value == result.value && preferred_certificate(part, *result.certificate))) {
            result.value = part.value;
            result.certificate = std::move(part);
            first = false;
        }
    }
    return result;
}

ExtremalResult solve_by_boundary(const MultipartiteGraph& g, int q, Method method) {
    int r = g.n - q + 1;
    GreedyTrace trace = algorithm_a(g, r);
    VertexSelection inner = complement_selection(g, trace.selection);

    // one block on everything outside the greedy selection, singletons inside
    std::vector<std::vector<int>> counts(static_cast<size_t>(g.k));
    for (int i = 0; i < g.k; ++i)
        counts[static_cast<size_t>(i)].push_back(inner.counts[i]);
    for (int i = 0; i < g.k; ++i)
        for (int c = 0; c < trace.selection.counts[i]; ++c) {
            for (int row = 0; row < g.k; ++row)
                counts[static_cast<size_t>(row)].push_back(row == i ? 1 : 0);
        }
    ExtremalResult result;
    result.value = edge_count(g) - boundary_edge_count(g, trace.selection);
    result.method = method;
    result.certificate = canonical_partition(g, counts);
    if (result.certificate->value != result.value)
        throw std::logic_error("boundary certificate value mismatch");
    return result;
}

} // namespace

ExtremalResult ellq(const MultipartiteGraph& g, int q, const SolveOptions& options) {
    require_query(g, q);

    switch (options.method) {
    case SolveMethod::sequence_solver:
        return solve_by_sequences(g, q, options.node_budget);
    case SolveMethod::oracle: {
        OracleEllqResult brute = oracle_ellq(g, q, options.oracle_max_n);
        return ExtremalResult{brute.value, Method::oracle, std::move(brute.certificate)};
    }
    case SolveMethod::closed_form:
    case SolveMethod::automatic:
        break;
    }

    if (std::optional<std::int64_t> table = exceptional_lookup(g, q)) {
        ExtremalResult result = solve_by_sequences(g, q, options.node_budget);
        if (result.value != *table)
            throw std::logic_error("exceptional table disagrees with the solver");
        result.method = Method::exceptional;
        return result;
    }
    if (q >= g.n - 3)
        return solve_by_boundary(g, q, Method::closed_form_small_gap);
    if (5 * q >= 4 * g.n - 2)
        return solve_by_boundary(g, q, Method::closed_form_large_gap);
    if (options.method == SolveMethod::closed_form)
        throw domain_error("no closed form applies to this graph and q");
    return solve_by_sequences(g, q, options.node_budget);
}

} // namespace antiramsey
