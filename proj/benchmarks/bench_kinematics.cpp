#include "zitter/entropy.hpp"
#include "zitter/kinematics.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace zitter;

void BM_VelocityAddition(benchmark::State& state) {
    Beta u(0.37), v(-0.81);
    for (auto _ : state) {
        benchmark::DoNotOptimize(velocity_addition(u, v));
        benchmark::ClobberMemory();
    }
}
BENCHMARK(BM_VelocityAddition);

void BM_ComposeViaProbabilities(benchmark::State& state) {
    Beta u(0.37), v(-0.81);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compose_velocity_via_probabilities(u, v));
    }
}
BENCHMARK(BM_ComposeViaProbabilities);

void BM_EntropyDirect(benchmark::State& state) {
    Beta b(0.6);
    for (auto _ : state) benchmark::DoNotOptimize(entropy_from_beta(b));
}
BENCHMARK(BM_EntropyDirect);

void BM_EntropyRelativistic(benchmark::State& state) {
    Beta b(0.6);
    for (auto _ : state) benchmark::DoNotOptimize(entropy_relativistic_form(b));
}
BENCHMARK(BM_EntropyRelativistic);

} // namespace
