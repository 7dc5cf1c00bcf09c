// Microbenchmarks for the hot paths: exhaustive orbit enumeration (the
// oracle), the closed-form degree ladder, class-number recounts, sublattice
// search, and bulk table rendering.

#include <cstdint>

#include <benchmark/benchmark.h>

#include "cmdeg/cartan.hpp"
#include "cmdeg/degrees.hpp"
#include "cmdeg/isogeny.hpp"
#include "cmdeg/order.hpp"
#include "cmdeg/rational.hpp"
#include "cmdeg/table.hpp"

namespace {

using cmdeg::Order;

void BM_PairOrbits(benchmark::State& state) {
    const Order order = cmdeg::order_from_delta(-15);
    const std::int64_t n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cmdeg::pair_orbits(order, 1, n));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_PairOrbits)->Arg(16)->Arg(27)->Arg(36)->Unit(benchmark::kMillisecond);

void BM_ClosedFormSweep(benchmark::State& state) {
    const Order order = cmdeg::order_from_delta(-static_cast<std::int64_t>(state.range(0)));
    for (auto _ : state) {
        std::int64_t acc = 0;
        for (int b = 1; b <= 8; ++b)
            for (int a = 0; a <= b; ++a)
                acc += cmdeg::t_tilde(order, cmdeg::PrimePowerLevel{2, a, b});
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_ClosedFormSweep)->Arg(15)->Arg(120);

void BM_RationalDegree(benchmark::State& state) {
    const Order order = cmdeg::order_from_delta(-20);
    for (auto _ : state) {
        std::int64_t acc = 0;
        for (std::int64_t n = 1; n <= 40; ++n) acc += cmdeg::t_qf(order, n).value;
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_RationalDegree);

void BM_ClassNumberRecount(benchmark::State& state) {
    const std::int64_t delta = -state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cmdeg::class_number_recount(delta));
    }
}
BENCHMARK(BM_ClassNumberRecount)->Arg(47)->Arg(4000);

void BM_RealIdealOracle(benchmark::State& state) {
    const Order order = cmdeg::order_from_delta(-64);
    for (auto _ : state) {
        bool any = false;
        for (std::int64_t n = 1; n <= 64; ++n)
            any ^= cmdeg::real_ideal_exists_oracle(order, n);
        benchmark::DoNotOptimize(any);
    }
}
BENCHMARK(BM_RealIdealOracle);

void BM_TableRender(benchmark::State& state) {
    cmdeg::TableConfig config;
    config.max_abs_delta = state.range(0);
    config.max_n = 12;
    config.workers = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            cmdeg::render_rows(cmdeg::degree_table(config), config.csv));
    }
}
BENCHMARK(BM_TableRender)
    ->Args({40, 1})
    ->Args({40, 8})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
