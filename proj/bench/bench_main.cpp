// Serial reference against the OpenMP kernels: the pair-strategy grid scan
// and whole experiment runs at a fixed trial count.

#include <benchmark/benchmark.h>

#include "matchmanip/experiments.hpp"
#include "matchmanip/two_for_one.hpp"

using namespace matchmanip;

namespace {

void pair_serial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Profile p = random_profile(n, trial_seed(3, n, 0));
    for (auto _ : state) benchmark::DoNotOptimize(optimal_pair_manipulation(p, 0, 0));
}

void pair_parallel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int threads = static_cast<int>(state.range(1));
    const Profile p = random_profile(n, trial_seed(3, n, 0));
    for (auto _ : state) benchmark::DoNotOptimize(optimal_pair_manipulation_parallel(p, 0, 0, threads));
}

void experiment(benchmark::State& state, ExperimentKind kind) {
    ExperimentConfig c;
    c.kind = kind;
    c.n_values = {static_cast<int>(state.range(0))};
    c.trials = 64;
    c.threads = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(run_experiment(c));
    state.SetItemsProcessed(state.iterations() * c.trials);
}

}  // namespace

BENCHMARK(pair_serial)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMicrosecond);
BENCHMARK(pair_parallel)->ArgsProduct({{10, 20, 40}, {1, 2, 4}})->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK_CAPTURE(experiment, freq_single, ExperimentKind::FreqSingle)
    ->ArgsProduct({{12}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK_CAPTURE(experiment, pushup_size, ExperimentKind::PushupSize)
    ->ArgsProduct({{20}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
