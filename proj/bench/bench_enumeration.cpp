// Parallel matrix kernel versus the serial reference on small chains.
// The reference rebuilds relations from scratch, so each iteration uses a
// fresh store and cache for both.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "posetgames/enumeration.hpp"

using namespace pgames;

namespace {

EnumerationOptions rounds(std::int64_t r) {
  EnumerationOptions opts;
  opts.budget.max_rounds = static_cast<std::uint32_t>(r);
  return opts;
}

void BM_Kernel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::size_t values = 0;
  for (auto _ : state) {
    TermStore store(Poset::linear_order(n));
    values = enumerate_monotone_values(store, rounds(state.range(1))).size();
    benchmark::DoNotOptimize(values);
  }
  state.counters["values"] = static_cast<double>(values);
  state.counters["threads"] = omp_get_max_threads();
}

void BM_Reference(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::size_t values = 0;
  for (auto _ : state) {
    TermStore store(Poset::linear_order(n));
    const Relations rel(store);
    values = enumerate_monotone_values_reference(store, rel, rounds(state.range(1))).size();
    benchmark::DoNotOptimize(values);
  }
  state.counters["values"] = static_cast<double>(values);
}

}  // namespace

// {chain length, max rounds}
BENCHMARK(BM_Kernel)->Args({3, 64})->Args({4, 3})->Args({4, 64})->Args({5, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Reference)->Args({3, 64})->Args({4, 3})->Args({4, 64})->Args({5, 2})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
