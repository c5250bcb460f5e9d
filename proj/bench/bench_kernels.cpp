// Serial reference vs OpenMP paths. Thread count follows OMP_NUM_THREADS.

#include "apsvm/diagnostics.hpp"
#include "apsvm/experiments.hpp"
#include "apsvm/reference.hpp"
#include "apsvm/rkhs.hpp"

#include <benchmark/benchmark.h>

namespace {

apsvm::SampleMatrix gaussian(std::uint64_t seed, Eigen::Index n, Eigen::Index p) {
    apsvm::Rng rng(seed);
    apsvm::SampleMatrix out(n, p);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < p; ++j) out(i, j) = rng.normal();
    return out;
}

void BM_GramParallel(benchmark::State& state) {
    const auto a = gaussian(1, state.range(0), state.range(1));
    const auto spec = apsvm::KernelSpec::rbf(1.0 / static_cast<double>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(apsvm::gram_matrix(spec, a, a));
}

void BM_GramSerial(benchmark::State& state) {
    const auto a = gaussian(1, state.range(0), state.range(1));
    const auto spec = apsvm::KernelSpec::rbf(1.0 / static_cast<double>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(apsvm::reference::gram_matrix(spec, a, a));
}

void BM_IndirectGramFactored(benchmark::State& state) {
    const auto z = gaussian(2, state.range(0), 100);
    const auto x = gaussian(3, state.range(0) * 2, 100);
    const auto ctx = apsvm::build_context(z, apsvm::KernelSpec::rbf(0.01));
    for (auto _ : state) benchmark::DoNotOptimize(apsvm::indirect_gram(ctx, x));
}

void BM_IndirectGramTripleLoop(benchmark::State& state) {
    const auto z = gaussian(2, state.range(0), 100);
    const auto x = gaussian(3, state.range(0) * 2, 100);
    const auto ctx = apsvm::build_context(z, apsvm::KernelSpec::rbf(0.01));
    for (auto _ : state) benchmark::DoNotOptimize(apsvm::reference::indirect_gram(ctx, x));
}

void BM_HeterogeneityParallel(benchmark::State& state) {
    const auto z = gaussian(4, 200, 50);
    const auto a = gaussian(5, 200, 50);
    for (auto _ : state)
        benchmark::DoNotOptimize(apsvm::heterogeneity_check(z, a, apsvm::KernelSpec::linear(), 10, static_cast<std::size_t>(state.range(0)), 7));
}

void BM_HeterogeneitySerial(benchmark::State& state) {
    const auto z = gaussian(4, 200, 50);
    const auto a = gaussian(5, 200, 50);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            apsvm::reference::heterogeneity_check(z, a, apsvm::KernelSpec::linear(), 10, static_cast<std::size_t>(state.range(0)), 7));
}

apsvm::BenchmarkConfig small_benchmark() {
    apsvm::BenchmarkConfig cfg;
    cfg.p_values = {10, 100};
    cfg.n_repeats = 4;
    cfg.base_seed = 1;
    return cfg;
}

void BM_BenchmarkCellsParallel(benchmark::State& state) {
    const auto cfg = small_benchmark();
    for (auto _ : state) benchmark::DoNotOptimize(apsvm::benchmark(cfg));
}

void BM_BenchmarkCellsSerial(benchmark::State& state) {
    const auto cfg = small_benchmark();
    for (auto _ : state) benchmark::DoNotOptimize(apsvm::reference::benchmark(cfg));
}

} // namespace

BENCHMARK(BM_GramParallel)->Args({200, 100})->Args({1000, 100})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GramSerial)->Args({200, 100})->Args({1000, 100})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IndirectGramFactored)->Arg(20)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IndirectGramTripleLoop)->Arg(20)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HeterogeneityParallel)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HeterogeneitySerial)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BenchmarkCellsParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BenchmarkCellsSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
