#include <benchmark/benchmark.h>

#include "containerlab/metric.hpp"

using namespace clab;

static void BM_BruteForceCount(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int r = static_cast<int>(state.range(1));
    for (auto _ : state) {
        BigUint count = brute_force_count(n, r);
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_BruteForceCount)->Args({4, 3})->Args({5, 3})->Args({5, 4})->Unit(benchmark::kMillisecond);

static void BM_CountViaHypergraph(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int r = static_cast<int>(state.range(1));
    for (auto _ : state) {
        BigUint count = count_via_hypergraph(n, r);
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_CountViaHypergraph)->Args({4, 3})->Args({5, 3})->Args({5, 4})->Unit(benchmark::kMillisecond);

static void BM_BuildMetricHypergraph(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto built = build_metric_hypergraph(n, 8);
        benchmark::DoNotOptimize(built);
    }
}
BENCHMARK(BM_BuildMetricHypergraph)->DenseRange(4, 8, 2);

static void BM_PolytopeBlock(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        PolytopeEstimate est = polytope_volume_mc(n, 65536, 9);
        benchmark::DoNotOptimize(est);
    }
    state.SetItemsProcessed(state.iterations() * 65536);
}
BENCHMARK(BM_PolytopeBlock)->Arg(3)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
