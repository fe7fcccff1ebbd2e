// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "unity/identity.hpp"
#include "unity/perm.hpp"

namespace {

void BM_CycleCountTotalSerial(benchmark::State& state)
{
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(unity::serial::cycle_count_total(n));
}

void BM_CycleCountTotalParallel(benchmark::State& state)
{
    const auto n = static_cast<unsigned>(state.range(0));
    const auto threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(unity::parallel::cycle_count_total(n, threads));
}

void BM_CensusSerial(benchmark::State& state)
{
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(unity::serial::census(n));
}

void BM_CensusParallel(benchmark::State& state)
{
    const auto n = static_cast<unsigned>(state.range(0));
    const auto threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(unity::parallel::census(n, threads));
}

}  // namespace

BENCHMARK(BM_CycleCountTotalSerial)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CycleCountTotalParallel)->ArgsProduct({{40, 60}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusSerial)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->ArgsProduct({{8, 9}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
