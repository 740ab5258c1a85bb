#include <benchmark/benchmark.h>

#include "amdesign/code.hpp"
#include "amdesign/criteria.hpp"
#include "amdesign/design.hpp"
#include "amdesign/harmonic.hpp"

using namespace amdesign;

static void BM_WeightDistribution(benchmark::State& state) {
    const LinearCode code = construct_extended_golay();
    EnumerationOptions opts;
    opts.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(weight_distribution(code, opts));
}
BENCHMARK(BM_WeightDistribution)->Arg(1)->Arg(4);

static void BM_IsTDesign(benchmark::State& state) {
    const SupportDesign design = support_design(construct_extended_golay(), 6);
    const auto t = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(is_t_design(design, t));
}
BENCHMARK(BM_IsTDesign)->DenseRange(2, 6, 2);

static void BM_HarmBasis(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(harm_basis(18, k));
}
BENCHMARK(BM_HarmBasis)->Arg(2)->Arg(3);

static void BM_HarmonicDesignCheck(benchmark::State& state) {
    const SupportDesign design = support_design(construct_extended_golay(), 6);
    for (auto _ : state) benchmark::DoNotOptimize(harmonic_design_check(design, 5));
}
BENCHMARK(BM_HarmonicDesignCheck)->Unit(benchmark::kMillisecond);

static void BM_DiophantineScan(benchmark::State& state) {
    const auto n_max = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(diophantine_scan(3, 3, n_max));
}
BENCHMARK(BM_DiophantineScan)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
