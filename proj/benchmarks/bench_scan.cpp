#include <benchmark/benchmark.h>

#include "fperfect/markov.hpp"
#include "fperfect/search.hpp"
#include "fperfect/sigma3.hpp"

using namespace fperfect;

static void BM_search_square_sum(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  const ScanOptions scan{static_cast<unsigned>(state.range(1))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_square_sum(3, limit, scan));
  }
  state.SetItemsProcessed(state.iterations() * limit);
}
BENCHMARK(BM_search_square_sum)
    ->Args({1'000'000, 1})
    ->Args({1'000'000, 4})
    ->Args({10'000'000, 1})
    ->Args({10'000'000, 4});

static void BM_certificates(benchmark::State& state) {
  const auto max_k = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_certificates(max_k, {40, 0}, {4}));
  }
}
BENCHMARK(BM_certificates)->Arg(50)->Arg(285);

static void BM_markov_scan(benchmark::State& state) {
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(markov::brute_solutions(3, bound, {4}));
  }
  state.SetItemsProcessed(state.iterations() * bound);
}
BENCHMARK(BM_markov_scan)->Arg(1'000'000)->Arg(100'000'000);

static void BM_two_power_times_prime(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sigma3::scan_two_power_times_prime(limit, {4}));
  }
  state.SetItemsProcessed(state.iterations() * limit);
}
BENCHMARK(BM_two_power_times_prime)->Arg(10'000'000)->Arg(100'000'000);

static void BM_conjecture_scan(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sigma3::conjecture_scan(limit, sigma3::OmegaMode::distinct, {4}));
  }
  state.SetItemsProcessed(state.iterations() * limit);
}
BENCHMARK(BM_conjecture_scan)->Arg(1'000'000)->Arg(10'000'000);

BENCHMARK_MAIN();
