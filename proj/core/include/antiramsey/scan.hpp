#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "antiramsey/extremal.hpp"
#include "antiramsey/multipartite.hpp"

namespace antiramsey {

struct ScanOptions {
    int max_n = 6;
    std::int64_t max_edges = 10;    // anti-Ramsey oracle comparison bound
    int oracle_max_n = kDefaultOracleMaxN; // hard cap; exceeding it truncates the scan
    std::int64_t node_budget = kDefaultNodeBudget;
    bool conjecture = false;        // also probe the boundary formula below the proven range
};

struct ScanInstance {
    std::vector<int> parts;
    int q = 0;
    std::int64_t ellq_formula = 0;
    std::int64_t ellq_oracle = 0;
    Method method = Method::sequence_solver;
    bool agree = true;
    std::optional<std::int64_t> ar_formula;
    std::optional<std::int64_t> ar_oracle;
    bool exceptional = false;
    bool strict_gap = false; // q within 3 of n yet above the boundary closed form
    // conjecture probe: boundary formula match for (2n+1)/3 <= q < (4n-2)/5
    std::optional<bool> conjecture_match;
};

struct ScanSummary {
    std::int64_t instances = 0;
    std::int64_t agreements = 0;
    std::int64_t disagreements = 0;
    std::int64_t ar_checked = 0;
    std::int64_t ar_agreements = 0;
    std::int64_t exceptional_hits = 0;
    std::int64_t strict_gap_hits = 0;
    std::int64_t conjecture_checked = 0;
    std::int64_t conjecture_matches = 0;
};

struct ScanReport {
    ScanOptions options;
    std::vector<ScanInstance> instances;
    ScanSummary summary;
    bool truncated = false;
    std::string truncation_reason;
};

// Sweeps every multipartite graph with n <= max_n and every 2 <= q <= n-1,
// comparing the solver against the exhaustive oracle (anti-Ramsey numbers
// too while |E| <= max_edges).  Deterministic: instances ordered by the
// canonical parts vector, then q.  A resource error mid-scan yields a
// truncated report with the reason recorded.
ScanReport scan(const ScanOptions& options);

} // namespace antiramsey
