#include <benchmark/benchmark.h>

#include "steiner/catalog.hpp"
#include "steiner/nu.hpp"

using namespace steiner;

namespace {

Execution mode(const benchmark::State& state)
{
    return state.range(1) ? Execution::parallel : Execution::serial;
}

void enumerate_simplex(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const Adc c = *build("oriental", {n}).complex;
    const EnumerationCaps caps{200000, 8};
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_nu(c, n, caps, mode(state)));
}

void brute_force_simplex(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const Adc c = *build("oriental", {n}).complex;
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_force_nu(c, n, 2, mode(state)));
}

} // namespace

// second argument: 0 serial, 1 parallel
BENCHMARK(enumerate_simplex)->ArgsProduct({{2, 3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(brute_force_simplex)->ArgsProduct({{2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
