#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "antiramsey/multipartite.hpp"
#include "antiramsey/partition.hpp"

namespace antiramsey {

inline constexpr std::int64_t kDefaultNodeBudget = 10'000'000;
inline constexpr int kDefaultOracleMaxN = 10;
inline constexpr std::int64_t kDefaultOracleMaxEdges = 12;

// Component size sequences that can carry an optimal spanning subgraph whose
// two largest components together have at most q vertices: pick the second
// size h2 with 1 <= h2 <= min(q/2, n-q); the first is q - h2.  Either the
// middle run of h2-blocks ends in one tail block of size 1..h2, or (for
// h2 >= 2) it ends in at least two singletons.  Ordered by h2 descending,
// tail-block form first, duplicates removed.
std::vector<ComponentSizeSequence> candidate_sequences(int n, int q);

// Distributes the parts of g over blocks of the given sizes so as to
// maximize the number of edges inside blocks, i.e. minimizes the number of
// same-part pairs per block.  Exact branch and bound over count matrices
// with a convexity bound; throws resource_error past node_budget.  Ties:
// first optimum in block-by-block lexicographic enumeration order, which is
// the lexicographically smallest optimal count matrix.
VertexPartition best_assignment(const MultipartiteGraph& g, const ComponentSizeSequence& sizes,
                                std::int64_t node_budget = kDefaultNodeBudget);

// The three (graph, q) pairs where the boundary-removal closed form
// undershoots the true optimum.
std::optional<std::int64_t> exceptional_lookup(const MultipartiteGraph& g, int q);

// How a value was obtained.
enum class Method {
    exceptional,
    closed_form_small_gap,
    closed_form_large_gap,
    sequence_solver,
    oracle,
};
std::string_view method_name(Method m);

// Which route the caller wants.
enum class SolveMethod { automatic, closed_form, sequence_solver, oracle };
std::optional<SolveMethod> parse_solve_method(std::string_view name);

struct SolveOptions {
    SolveMethod method = SolveMethod::automatic;
    std::int64_t node_budget = kDefaultNodeBudget;
    int oracle_max_n = kDefaultOracleMaxN;
    std::int64_t oracle_max_edges = kDefaultOracleMaxEdges;
};

struct ExtremalResult {
    std::int64_t value = 0;
    Method method = Method::sequence_solver;
    std::optional<VertexPartition> certificate;
};

// Largest size of a disconnected spanning subgraph of g whose two largest
// components together have at most q vertices (2 <= q <= n-1, k >= 2).
// Dispatch: exceptional table, boundary-removal closed forms when q is
// within 3 of n or at least (4n-2)/5, else the candidate-sequence solver.
ExtremalResult ellq(const MultipartiteGraph& g, int q, const SolveOptions& options = {});

} // namespace antiramsey
