#include "dynalg/constraint.hpp"
#include "dynalg/ks.hpp"
#include "dynalg/so42.hpp"

#include <benchmark/benchmark.h>

using namespace dynalg;

static void BM_BuildGenerators(benchmark::State& state) {
    const auto basis = fock::enumerate_basis(4, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(so42::build_generators(basis));
    state.counters["basis"] = static_cast<double>(basis->size());
}
BENCHMARK(BM_BuildGenerators)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_CommutatorTable(benchmark::State& state) {
    const auto g = so42::build_generators(fock::enumerate_basis(4, static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(so42::verify_commutators(g, so42::MetricTensor{}, 1e-10));
}
BENCHMARK(BM_CommutatorTable)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_Casimirs(benchmark::State& state) {
    const auto g = so42::build_generators(fock::enumerate_basis(4, static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(so42::casimirs(g, so42::MetricTensor{}));
}
BENCHMARK(BM_Casimirs)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_LabelStates(benchmark::State& state) {
    const auto g = so42::build_generators(fock::enumerate_basis(4, 14));
    for (auto _ : state) benchmark::DoNotOptimize(so42::label_states(g, 4));
}
BENCHMARK(BM_LabelStates)->Unit(benchmark::kMillisecond);

static void BM_Sp8StructureConstants(benchmark::State& state) {
    const auto basis = bilinear::sp8_basis();
    for (auto _ : state) benchmark::DoNotOptimize(bilinear::structure_constants(basis));
}
BENCHMARK(BM_Sp8StructureConstants)->Unit(benchmark::kMillisecond);

static void BM_DescentChain(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(constraint::descent_chain());
}
BENCHMARK(BM_DescentChain)->Unit(benchmark::kMillisecond);

static void BM_KSCheckSuite(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(ks::check_suite(1, 1000));
}
BENCHMARK(BM_KSCheckSuite)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
