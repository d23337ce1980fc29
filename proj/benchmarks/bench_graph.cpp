#include <benchmark/benchmark.h>

#include "containerlab/graph.hpp"

using namespace clab;

static void BM_ProperSquare(benchmark::State& state) {
    const Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, 42);
    for (auto _ : state) {
        Graph sq = proper_square(g);
        benchmark::DoNotOptimize(sq);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ProperSquare)->RangeMultiplier(2)->Range(16, 128)->Complexity();

static void BM_IsC4Free(benchmark::State& state) {
    const Graph g = polarity_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        bool free4 = is_c4_free(g);
        benchmark::DoNotOptimize(free4);
    }
}
BENCHMARK(BM_IsC4Free)->Arg(3)->Arg(5)->Arg(9);

static void BM_MinDegreeOrdering(benchmark::State& state) {
    const Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, 7);
    for (auto _ : state) {
        VertexOrdering ord = min_degree_ordering(g);
        benchmark::DoNotOptimize(ord);
    }
}
BENCHMARK(BM_MinDegreeOrdering)->RangeMultiplier(2)->Range(16, 128);

static void BM_ExactC4FreeSubgraph(benchmark::State& state) {
    const Graph g = random_graph(static_cast<int>(state.range(0)), 0.4, 1246);
    for (auto _ : state) {
        ExtremalSubgraph ex = max_c4_free_subgraph_exact(g);
        benchmark::DoNotOptimize(ex);
    }
}
BENCHMARK(BM_ExactC4FreeSubgraph)->DenseRange(10, 14, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
