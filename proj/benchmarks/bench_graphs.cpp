#include <benchmark/benchmark.h>

#include "divgraph/class_sizes.hpp"
#include "divgraph/graphs.hpp"

using namespace divgraph;

static void BM_EnumerateCycleTypes(benchmark::State& state) {
    unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_cycle_types(n));
}
BENCHMARK(BM_EnumerateCycleTypes)->Arg(20)->Arg(30)->Arg(40);

static void BM_SizeSetSym(benchmark::State& state) {
    unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(size_set_sym(n));
}
BENCHMARK(BM_SizeSetSym)->Arg(20)->Arg(30)->Arg(40);

static void BM_ScanD(benchmark::State& state) {
    unsigned n = static_cast<unsigned>(state.range(0));
    SizeSet x = size_set_sym(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(scan_D(x));
}
BENCHMARK(BM_ScanD)->Arg(20)->Arg(30)->Arg(35)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_Diameter(benchmark::State& state) {
    unsigned n = static_cast<unsigned>(state.range(0));
    UGraph g = build_D(size_set_sym(n));
    for (auto _ : state)
        benchmark::DoNotOptimize(components(g));
}
BENCHMARK(BM_Diameter)->Arg(15)->Arg(20)->Arg(25)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
