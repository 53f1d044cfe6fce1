// Microbenchmarks for the hot paths: modular decomposition, the P4-sparse
// coloring pipeline, spider recognition and greedy coloring.
//
//   ./modcolor_benchmarks --benchmark_time_unit=ms

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "modcolor/coloring_engine.hpp"
#include "modcolor/mdtree.hpp"
#include "modcolor/oracles.hpp"
#include "modcolor/p4sparse.hpp"

namespace {

using namespace modcolor;

Graph p4sparse_instance(int n, std::uint64_t seed) {
    GeneratorConfig config;
    config.flavor = GraphFlavor::P4Sparse;
    config.n = n;
    config.seed = seed;
    return generate(config);
}

void BM_ModularDecomposition(benchmark::State& state) {
    Graph g = p4sparse_instance(static_cast<int>(state.range(0)), 7);
    for (auto _ : state) {
        MDTree tree = modular_decomposition(g);
        benchmark::DoNotOptimize(tree.root.module.size());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ModularDecomposition)->RangeMultiplier(4)->Range(1 << 10, 1 << 17)->Complexity();

void BM_P4SparseColoring(benchmark::State& state) {
    Graph g = p4sparse_instance(static_cast<int>(state.range(0)), 11);
    for (auto _ : state) {
        Coloring sigma = p4sparse_modmin_coloring(g);
        benchmark::DoNotOptimize(sigma.at(0));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_P4SparseColoring)->RangeMultiplier(4)->Range(1 << 10, 1 << 17)->Complexity();

void BM_SpiderRecognition(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    GeneratorConfig config;
    config.flavor = GraphFlavor::Spider;
    config.spider_k = k;
    config.head_n = k / 2;
    config.seed = 3;
    Graph g = generate(config);
    for (auto _ : state) {
        auto sd = recognize_spider(g);
        benchmark::DoNotOptimize(sd.has_value());
    }
}
BENCHMARK(BM_SpiderRecognition)->RangeMultiplier(4)->Range(8, 512);

void BM_GreedyColoring(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Graph g = p4sparse_instance(n, 23);
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::mt19937_64 rng(5);
    for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng() % (i + 1)]);
    for (auto _ : state) {
        Coloring sigma = greedy_coloring(g, order);
        benchmark::DoNotOptimize(sigma.at(0));
    }
}
BENCHMARK(BM_GreedyColoring)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

void BM_CountHierarchicalColorings(benchmark::State& state) {
    GeneratorConfig config;
    config.flavor = GraphFlavor::Cograph;
    config.n = static_cast<int>(state.range(0));
    config.seed = 29;
    Graph g = generate(config);
    Cotree tree = binary_refine(discriminating_cotree(g), BalancedSplit{});
    for (auto _ : state) {
        BigCount z = count_hierarchical_colorings(g, tree);
        benchmark::DoNotOptimize(z.backend().size());
    }
}
BENCHMARK(BM_CountHierarchicalColorings)->RangeMultiplier(2)->Range(64, 512);

}  // namespace

BENCHMARK_MAIN();
