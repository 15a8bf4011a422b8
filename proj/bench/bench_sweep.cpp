// Serial reference vs. OpenMP sweep on the largest figure grids.

#include <benchmark/benchmark.h>

#include <string>

#include "entspec/presets.hpp"
#include "entspec/sweep.hpp"

namespace {

const char* const kFigures[] = {"fig2a", "fig3a", "fig4b"};

void BM_Serial(benchmark::State& state) {
    const auto cfg = entspec::figure_preset(kFigures[state.range(0)]);
    for (auto _ : state) benchmark::DoNotOptimize(entspec::run_sweep_serial(cfg));
    state.SetLabel(kFigures[state.range(0)]);
    state.SetItemsProcessed(state.iterations() * static_cast<long>(entspec::run_sweep_serial(cfg).values.size()));
}

void BM_OpenMP(benchmark::State& state) {
    const auto cfg = entspec::figure_preset(kFigures[state.range(0)]);
    const int threads = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(entspec::run_sweep(cfg, {threads}));
    state.SetLabel(std::string(kFigures[state.range(0)]) + " threads=" + std::to_string(threads));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(entspec::run_sweep_serial(cfg).values.size()));
}

}  // namespace

BENCHMARK(BM_Serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OpenMP)->ArgsProduct({{0, 1, 2}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
