#include <benchmark/benchmark.h>

#include <vector>

#include "antiramsey/antiramsey.hpp"
#include "antiramsey/greedy.hpp"
#include "antiramsey/oracle.hpp"
#include "antiramsey/scan.hpp"
#include "antiramsey/witness_io.hpp"

using namespace antiramsey;

namespace {

void BM_ClosedForm(benchmark::State& state) {
    MultipartiteGraph g = build_graph({40, 30, 20, 10});
    int q = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(ellq(g, q).value);
}
BENCHMARK(BM_ClosedForm)->Arg(97)->Arg(85);

void BM_SequenceSolver(benchmark::State& state) {
    MultipartiteGraph g = build_graph({5, 4, 3, 2, 1});
    int q = static_cast<int>(state.range(0));
    SolveOptions opts;
    opts.method = SolveMethod::sequence_solver;
    for (auto _ : state)
        benchmark::DoNotOptimize(ellq(g, q, opts).value);
}
BENCHMARK(BM_SequenceSolver)->Arg(4)->Arg(6)->Arg(8);

void BM_BestAssignment(benchmark::State& state) {
    MultipartiteGraph g = build_graph({8, 6, 4, 2});
    ComponentSizeSequence seq = candidate_sequences(g.n, static_cast<int>(state.range(0)))[0];
    for (auto _ : state)
        benchmark::DoNotOptimize(best_assignment(g, seq).value);
}
BENCHMARK(BM_BestAssignment)->Arg(6)->Arg(10);

void BM_GreedyBoundary(benchmark::State& state) {
    std::vector<int> parts(10, 100);
    MultipartiteGraph g = build_graph(parts);
    for (auto _ : state)
        benchmark::DoNotOptimize(algorithm_a(g, g.n / 2).selection.counts);
}
BENCHMARK(BM_GreedyBoundary);

void BM_OracleEllq(benchmark::State& state) {
    MultipartiteGraph g = build_graph({3, 3, 3});
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle_ellq(g, 6).value);
}
BENCHMARK(BM_OracleEllq)->Unit(benchmark::kMillisecond);

void BM_OracleAr(benchmark::State& state) {
    MultipartiteGraph g = build_graph({3, 2});
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle_ar(g, 3).value);
}
BENCHMARK(BM_OracleAr);

// proving the absence of a rainbow spanning tree is the expensive direction
void BM_RainbowAbsent(benchmark::State& state) {
    MultipartiteGraph g = build_graph(std::vector<int>(8, 1));
    AntiRamseyResult result = anti_ramsey(g, 7);
    Coloring witness = witness_from_certificate(g, *result.certificate);
    for (auto _ : state)
        benchmark::DoNotOptimize(find_rainbow_tree(witness, 7).has_value());
}
BENCHMARK(BM_RainbowAbsent);

void BM_Scan(benchmark::State& state) {
    ScanOptions options;
    options.max_n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(scan(options).summary.instances);
}
BENCHMARK(BM_Scan)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
