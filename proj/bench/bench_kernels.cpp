// Serial reference vs OpenMP path for the batch kernels.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "turbex/exergy_engine.hpp"
#include "turbex/kernels.hpp"

using namespace turbex;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) == 0 ? Execution::Serial : Execution::Parallel; }

std::vector<kernels::PhQuery> queries(std::size_t n) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> log_p(std::log(0.005), std::log(15.0));
    std::uniform_real_distribution<double> h(200.0, 3400.0);
    std::vector<kernels::PhQuery> out(n);
    for (auto& q : out) q = {std::exp(log_p(rng)), h(rng)};
    return out;
}

void BM_ResolveBatch(benchmark::State& state) {
    const auto batch = queries(static_cast<std::size_t>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::resolve_batch(batch, mode(state)));
    state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_ResolveBatch)->ArgsProduct({{0, 1}, {1000, 20000}})->ArgNames({"parallel", "n"});

void BM_AmbientSweep(benchmark::State& state) {
    const auto regime = *builtin_regime("Original");
    std::vector<double> grid;
    for (double t = 273.15 + 5.0; t <= 273.15 + 45.0 + 1e-9; t += 0.5) grid.push_back(t);
    for (auto _ : state) benchmark::DoNotOptimize(ambient_sweep(regime, grid, 0.1, {}, mode(state)));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid.size()));
}
BENCHMARK(BM_AmbientSweep)->Arg(0)->Arg(1)->ArgName("parallel");

void BM_CompareRegimes(benchmark::State& state) {
    const auto regimes = builtin_regimes();
    const auto ambient = AmbientState::base();
    for (auto _ : state) benchmark::DoNotOptimize(kernels::analyze_regimes(regimes, ambient, {}, mode(state)));
}
BENCHMARK(BM_CompareRegimes)->Arg(0)->Arg(1)->ArgName("parallel");

}  // namespace

BENCHMARK_MAIN();
