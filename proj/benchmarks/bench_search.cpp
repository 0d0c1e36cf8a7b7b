#include <benchmark/benchmark.h>

#include "ipset/search.hpp"

using namespace ipset;

static void BM_candidate_points(benchmark::State& state) {
    const std::int64_t d = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(candidate_points(d));
    }
    state.SetComplexityN(d);
}
BENCHMARK(BM_candidate_points)->Arg(8)->Arg(16)->Arg(32)->Arg(64)->Complexity();

static void BM_build_graph(benchmark::State& state) {
    const auto pool = candidate_points(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_compatibility_graph(pool));
    }
}
BENCHMARK(BM_build_graph)->Arg(8)->Arg(16)->Arg(32);

static void BM_find_sets_semi(benchmark::State& state) {
    const std::int64_t d = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_sets(4, d, PositionClass::SemiGeneral, true));
    }
}
BENCHMARK(BM_find_sets_semi)->Arg(4)->Arg(8)->Arg(16);

static void BM_minimal_diameter_n5(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(minimal_diameter(5, PositionClass::SemiGeneral, 10, true));
    }
}
BENCHMARK(BM_minimal_diameter_n5);

BENCHMARK_MAIN();
