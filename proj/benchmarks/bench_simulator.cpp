#include "zitter/simulator.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace zitter;

SimConfig config(std::int64_t ticks, Dynamics dynamics) {
    SimConfig cfg;
    cfg.beta = Beta(0.3);
    cfg.ticks = static_cast<std::uint64_t>(ticks);
    cfg.seed = 1;
    cfg.dynamics = dynamics;
    return cfg;
}

void BM_GeneratePathIid(benchmark::State& state) {
    const auto cfg = config(state.range(0), Dynamics::iid);
    for (auto _ : state) benchmark::DoNotOptimize(generate_path(cfg));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GeneratePathIid)->Arg(1 << 16)->Arg(1 << 20);

void BM_SimulateDriftTelegraph(benchmark::State& state) {
    const auto cfg = config(state.range(0), Dynamics::telegraph);
    for (auto _ : state) benchmark::DoNotOptimize(simulate_drift(cfg));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateDriftTelegraph)->Arg(1 << 20);

void BM_ObserveFromMovingFrame(benchmark::State& state) {
    const auto ticks = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(observe_from_moving_frame(Beta(0.5), Beta(-0.2), ticks, 3));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ObserveFromMovingFrame)->Arg(1 << 20);

void BM_RunEnsemble(benchmark::State& state) {
    const auto cfg = config(10'000, Dynamics::iid);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_ensemble(cfg, 100, static_cast<unsigned>(state.range(0))));
    }
}
BENCHMARK(BM_RunEnsemble)->Arg(1)->Arg(4)->UseRealTime();

} // namespace
