#include <benchmark/benchmark.h>

#include "containerlab/container.hpp"
#include "containerlab/rng.hpp"

using namespace clab;

static void BM_KwContainer(benchmark::State& state) {
    const Graph square = proper_square(polarity_graph(static_cast<int>(state.range(0))));
    // a single vertex is always independent; exercises the full peel loop
    Bits128 ind;
    ind.set(0);
    for (auto _ : state) {
        GreedyContainerResult built = greedy_container(square, ind, {}, 2);
        benchmark::DoNotOptimize(built);
    }
}
BENCHMARK(BM_KwContainer)->Arg(3)->Arg(5)->Arg(7)->Arg(9);

static void BM_EnumerateFamily(benchmark::State& state) {
    const Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, 5);
    for (auto _ : state) {
        ContainerFamily family = enumerate_all_containers(g, {}, 1, g.n());
        benchmark::DoNotOptimize(family);
    }
}
BENCHMARK(BM_EnumerateFamily)->DenseRange(8, 16, 4);

static void BM_RightContainers(benchmark::State& state) {
    const Graph g = polarity_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        RightContainerSet rc = build_right_containers(g, 0.2);
        benchmark::DoNotOptimize(rc);
    }
    state.SetLabel("n=" + std::to_string(g.n()));
}
BENCHMARK(BM_RightContainers)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_Sparsify(benchmark::State& state) {
    const Graph g = Graph::complete(static_cast<int>(state.range(0)));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        SparsifierResult f = sparsify(g, 4.0, derive_seed(1, seed++));
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_Sparsify)->RangeMultiplier(2)->Range(16, 128);

BENCHMARK_MAIN();
