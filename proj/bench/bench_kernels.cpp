// Serial reference vs OpenMP kernels behind the brute-force oracles.

#include <benchmark/benchmark.h>

#include "krom/gen.hpp"
#include "krom/kernels.hpp"

namespace {

using namespace krom;

struct Fixture {
    kernels::IndexedProgram lhs;
    kernels::IndexedProgram rhs;
};

// Two uniformly equivalent programs (the second adds a shortcut edge along
// an existing path), so the counterexample search scans every mask.
Fixture make_fixture(std::size_t atoms) {
    const auto names = generated_alphabet(atoms).to_vector();
    Program chain;
    for (std::size_t i = 0; i + 1 < names.size(); ++i) chain.insert(Rule::proper(names[i + 1], names[i]));
    chain.insert(Rule::fact(names.front()));
    Program shortcut = chain;
    shortcut.insert(Rule::proper(names.back(), names.front()));
    return {kernels::index_program(chain, names), kernels::index_program(shortcut, names)};
}

void BM_MeetSerial(benchmark::State& state) {
    const auto f = make_fixture(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::meet_of_models_serial(f.lhs));
}

void BM_MeetParallel(benchmark::State& state) {
    const auto f = make_fixture(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::meet_of_models_parallel(f.lhs));
}

void BM_UniformSerial(benchmark::State& state) {
    const auto f = make_fixture(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::first_uniform_counterexample_serial(f.lhs, f.rhs));
}

void BM_UniformParallel(benchmark::State& state) {
    const auto f = make_fixture(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::first_uniform_counterexample_parallel(f.lhs, f.rhs));
}

}  // namespace

BENCHMARK(BM_MeetSerial)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MeetParallel)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UniformSerial)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UniformParallel)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
