// Serial reference vs OpenMP-partitioned enumeration, and the hole-search
// kernels, over a range of sizes.

#include <benchmark/benchmark.h>

#include "iamonds/enumerate.hpp"

namespace {

void BM_enumerate_serial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long count = 0;
        iamonds::enumerate_fixed(n, [&](const iamonds::Polyiamond&) { ++count; },
                                 {.max_n = 20});
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_enumerate_serial)->Arg(8)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_enumerate_parallel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const auto stats = iamonds::enum_stats(n, false, false, {.limits = {.max_n = 20}});
        benchmark::DoNotOptimize(stats.fixed_count);
    }
}
BENCHMARK(BM_enumerate_parallel)->Arg(8)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_enumerate_parallel_1job(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const auto stats =
            iamonds::enum_stats(n, false, false, {.jobs = 1, .limits = {.max_n = 20}});
        benchmark::DoNotOptimize(stats.fixed_count);
    }
}
BENCHMARK(BM_enumerate_parallel_1job)->Arg(8)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_max_holes(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const auto stats = iamonds::f_max_holes(n, {.limits = {.max_n = 20}});
        benchmark::DoNotOptimize(stats.max_holes);
    }
}
BENCHMARK(BM_max_holes)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
