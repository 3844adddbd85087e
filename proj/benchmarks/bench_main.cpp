#include <benchmark/benchmark.h>

#include "mvlab/covering.hpp"
#include "mvlab/turan.hpp"
#include "mvlab/visibility.hpp"

using namespace mvlab;

static void BM_TotalKneser72(benchmark::State& state) {
    VisibilityOracle o(FamilyGraph::kneser(7, 2));
    for (auto _ : state) benchmark::DoNotOptimize(o.max_visibility_number(VisibilityVariant::total).value);
}
BENCHMARK(BM_TotalKneser72)->Unit(benchmark::kMillisecond);

static void BM_MutualJohnson(benchmark::State& state) {
    VisibilityOracle o(FamilyGraph::johnson(static_cast<int>(state.range(0)), 2));
    for (auto _ : state) benchmark::DoNotOptimize(o.max_visibility_number(VisibilityVariant::mutual).value);
}
BENCHMARK(BM_MutualJohnson)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_DistanceTable(benchmark::State& state) {
    auto g = FamilyGraph::bipartite_kneser(9, 3);
    for (auto _ : state) {
        DistanceTable t(g);
        benchmark::DoNotOptimize(t.diameter());
    }
}
BENCHMARK(BM_DistanceTable)->Unit(benchmark::kMillisecond);

static void BM_ExC4(benchmark::State& state) {
    auto p = build_c4_suspension(2);
    for (auto _ : state) benchmark::DoNotOptimize(ex_uniform(static_cast<int>(state.range(0)), 2, p).value);
}
BENCHMARK(BM_ExC4)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

static void BM_ExK4(benchmark::State& state) {
    auto p = build_k4_suspension(2);
    for (auto _ : state) benchmark::DoNotOptimize(ex_uniform(7, 2, p).value);
}
BENCHMARK(BM_ExK4)->Unit(benchmark::kMillisecond);

static void BM_TransversalH234(benchmark::State& state) {
    auto h = build_H_nk(23, 4);
    for (auto _ : state) benchmark::DoNotOptimize(transversal_number(h).tau);
}
BENCHMARK(BM_TransversalH234);

static void BM_Covering754(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(covering_number(7, 5, 4).value);
}
BENCHMARK(BM_Covering754)->Unit(benchmark::kMillisecond);

static void BM_CStar(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(c_star(static_cast<int>(state.range(0)), 2).value);
}
BENCHMARK(BM_CStar)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
