// Acceptance gate: one line per criterion, exit 0 iff every criterion holds.
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "antiramsey/antiramsey.hpp"
#include "antiramsey/greedy.hpp"
#include "antiramsey/multipartite.hpp"
#include "antiramsey/oracle.hpp"
#include "antiramsey/witness_io.hpp"

using namespace antiramsey;

namespace {

std::string show(const std::vector<int>& parts, int q) {
    std::ostringstream out;
    out << "parts=";
    for (size_t i = 0; i < parts.size(); ++i)
        out << (i ? "," : "") << parts[i];
    out << " q=" << q;
    return out.str();
}

// enumerate all selection count vectors of total r
void for_all_selections(const MultipartiteGraph& g, int r,
                        const std::function<void(const VertexSelection&)>& fn) {
    std::vector<int> counts(static_cast<size_t>(g.k), 0);
    std::function<void(int, int)> rec = [&](int part, int left) {
        if (part == g.k) {
            if (left == 0)
                fn(VertexSelection{counts, r});
            return;
        }
        int cap = std::min(g.parts[static_cast<size_t>(part)], left);
        for (int c = 0; c <= cap; ++c) {
            counts[static_cast<size_t>(part)] = c;
            rec(part + 1, left - c);
        }
        counts[static_cast<size_t>(part)] = 0;
    };
    rec(0, r);
}

bool exceptional_values(std::string& detail) {
    struct Row {
        std::vector<int> parts;
        int q;
        std::int64_t want;
    };
    const std::vector<Row> rows = {{{3, 3}, 4, 4}, {{4, 3}, 4, 4}, {{3, 3, 3}, 6, 10}};
    for (const Row& row : rows) {
        std::int64_t got = anti_ramsey(build_graph(row.parts), row.q).value;
        if (got != row.want) {
            detail = show(row.parts, row.q) + " got " + std::to_string(got) + " want " +
                     std::to_string(row.want);
            return false;
        }
    }
    return true;
}

bool sequence_enumeration(std::string& detail) {
    const std::vector<std::vector<int>> want = {
        {4, 4, 4, 1},          {5, 3, 3, 2},    {5, 3, 3, 1, 1},
        {6, 2, 2, 2, 1},       {6, 2, 2, 1, 1, 1}, {7, 1, 1, 1, 1, 1, 1}};
    std::vector<ComponentSizeSequence> got = candidate_sequences(13, 8);
    if (got.size() != want.size()) {
        detail = "expected " + std::to_string(want.size()) + " sequences, got " +
                 std::to_string(got.size());
        return false;
    }
    for (size_t i = 0; i < want.size(); ++i)
        if (got[i].sizes != want[i]) {
            detail = "sequence " + std::to_string(i + 1) + " differs";
            return false;
        }
    return true;
}

bool solver_matches_enumeration(std::string& detail) {
    long checked = 0;
    for (const MultipartiteGraph& g : enumerate_graphs(8))
        for (int q = 2; q <= g.n - 1; ++q) {
            std::int64_t fast = ellq(g, q).value;
            std::int64_t slow = oracle_ellq(g, q, 8).value;
            ++checked;
            if (fast != slow) {
                detail = show(g.parts, q) + " solver " + std::to_string(fast) + " enumeration " +
                         std::to_string(slow);
                return false;
            }
        }
    if (checked == 0) {
        detail = "no instances checked";
        return false;
    }
    return true;
}

bool anti_ramsey_matches_search(std::string& detail) {
    long checked = 0;
    for (const MultipartiteGraph& g : enumerate_graphs(8)) {
        if (edge_count(g) > 10)
            continue;
        for (int q = 2; q <= g.n - 1; ++q) {
            std::int64_t fast = anti_ramsey(g, q).value;
            std::int64_t slow = oracle_ar(g, q, 10).value;
            ++checked;
            if (fast != slow) {
                detail = show(g.parts, q) + " formula " + std::to_string(fast) + " search " +
                         std::to_string(slow);
                return false;
            }
        }
    }
    if (checked == 0) {
        detail = "no instances checked";
        return false;
    }
    return true;
}

bool greedy_boundary_optimal(std::string& detail) {
    for (const MultipartiteGraph& g : enumerate_graphs(10))
        for (int r = 1; r <= g.n; ++r) {
            std::int64_t greedy = boundary_edge_count(g, algorithm_a(g, r).selection);
            std::int64_t brute = oracle_min_boundary(g, r, 10);
            if (greedy != brute) {
                detail = show(g.parts, r) + " greedy " + std::to_string(greedy) + " brute " +
                         std::to_string(brute);
                return false;
            }
        }
    // the minimizer test must accept exactly the optimal selections
    bool ok = true;
    for (const MultipartiteGraph& g : enumerate_graphs(8))
        for (int r = 1; r <= g.n && ok; ++r) {
            std::int64_t minimum = oracle_min_boundary(g, r, 8);
            for_all_selections(g, r, [&](const VertexSelection& sel) {
                if (!ok)
                    return;
                bool optimal = boundary_edge_count(g, sel) == minimum;
                if (is_min_selection(g, sel) != optimal) {
                    detail = show(g.parts, r) + " minimizer test mislabels a selection";
                    ok = false;
                }
            });
        }
    return ok;
}

bool closed_form_boundary_agrees(std::string& detail) {
    for (const MultipartiteGraph& g : enumerate_graphs(12))
        for (int r = 2; r <= 4 && r <= g.n; ++r) {
            std::int64_t formula = closed_form_boundary(g, r);
            std::int64_t greedy = boundary_edge_count(g, algorithm_a(g, r).selection);
            if (formula != greedy) {
                detail = show(g.parts, r) + " formula " + std::to_string(formula) + " greedy " +
                         std::to_string(greedy);
                return false;
            }
        }
    return true;
}

bool strict_gap_census(std::string& detail) {
    std::vector<std::pair<std::vector<int>, int>> found;
    for (const MultipartiteGraph& g : enumerate_graphs(9))
        for (int q = std::max(2, g.n - 3); q <= g.n - 1; ++q) {
            std::int64_t value = ellq(g, q).value;
            std::int64_t removal = edge_count(g) - min_boundary_edges(g, g.n - q + 1);
            if (value > removal)
                found.emplace_back(g.parts, q);
        }
    const std::vector<std::pair<std::vector<int>, int>> want = {
        {{3, 3}, 4}, {{4, 3}, 4}, {{3, 3, 3}, 6}};
    if (found != want) {
        detail = "census has " + std::to_string(found.size()) + " pairs";
        return false;
    }
    return true;
}

bool witness_is_sound(std::string& detail) {
    for (const MultipartiteGraph& g : enumerate_graphs(8))
        for (int q = 2; q <= g.n - 1; ++q) {
            AntiRamseyResult result = anti_ramsey(g, q);
            Coloring witness = witness_from_certificate(g, *result.certificate);
            if (witness.num_classes != result.value) {
                detail = show(g.parts, q) + " witness has " +
                         std::to_string(witness.num_classes) + " classes, value is " +
                         std::to_string(result.value);
                return false;
            }
            if (find_rainbow_tree(witness, q)) {
                detail = show(g.parts, q) + " witness admits a rainbow tree";
                return false;
            }
        }
    return true;
}

bool fast_path_agrees(std::string& detail) {
    long applied = 0;
    for (const MultipartiteGraph& g : enumerate_graphs(12))
        for (int q = 2; q <= g.n - 1; ++q) {
            std::optional<std::int64_t> fast = ar_large_gap_fastpath(g, q);
            if (!fast)
                continue;
            ++applied;
            std::int64_t full = anti_ramsey(g, q).value;
            if (*fast != full) {
                detail = show(g.parts, q) + " fast " + std::to_string(*fast) + " full " +
                         std::to_string(full);
                return false;
            }
        }
    if (applied == 0) {
        detail = "fast path never applied";
        return false;
    }
    return true;
}

} // namespace

int main() {
    struct Criterion {
        const char* label;
        bool (*body)(std::string&);
    };
    const std::vector<Criterion> criteria = {
        {"exceptional table values", exceptional_values},
        {"component size sequences for n=13, q=8", sequence_enumeration},
        {"solver matches exhaustive enumeration (n <= 8)", solver_matches_enumeration},
        {"anti-Ramsey values match edge-partition search (|E| <= 10)", anti_ramsey_matches_search},
        {"greedy boundary optimal, minimizer test exact (n <= 10)", greedy_boundary_optimal},
        {"closed-form boundary for r in {2,3,4} (n <= 12)", closed_form_boundary_agrees},
        {"strict-gap census (n <= 9) is exactly three pairs", strict_gap_census},
        {"witness colorings extremal and rainbow-free (n <= 8)", witness_is_sound},
        {"large-gap fast path agrees with full computation (n <= 12)", fast_path_agrees},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        bool ok = false;
        auto start = std::chrono::steady_clock::now();
        try {
            ok = criteria[i].body(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << i + 1 << ". " << criteria[i].label << " ("
                  << std::fixed << std::setprecision(2) << seconds << " s)";
        if (!ok && !detail.empty())
            std::cout << " - " << detail;
        std::cout << "\n";
        if (!ok)
            ++failures;
    }
    std::cout << "result: " << criteria.size() - static_cast<size_t>(failures) << "/"
              << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
