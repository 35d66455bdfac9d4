#include <benchmark/benchmark.h>

#include "fperfect/contfrac.hpp"
#include "fperfect/factorization.hpp"
#include "fperfect/fibonacci.hpp"
#include "fperfect/natural.hpp"
#include "fperfect/primality.hpp"

using namespace fperfect;

static void BM_fib(benchmark::State& state) {
  const auto index = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fib(index));
  }
}
BENCHMARK(BM_fib)->Arg(431)->Arg(4310)->Arg(43100);

static void BM_isqrt(benchmark::State& state) {
  Natural n = pow_ui(parse_natural("123456789123456789"), state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(isqrt(n));
  }
}
BENCHMARK(BM_isqrt)->Arg(2)->Arg(8)->Arg(32);

static void BM_is_prime_64bit(benchmark::State& state) {
  Natural n = (Natural(1) << 61) - 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_prime(n));
  }
}
BENCHMARK(BM_is_prime_64bit);

static void BM_is_prime_fibonacci(benchmark::State& state) {
  // 90- and 119-digit probable primes, 40 probabilistic rounds each
  Natural n = fib(static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_prime(n));
  }
}
BENCHMARK(BM_is_prime_fibonacci)->Arg(431)->Arg(569);

static void BM_factorize_semiprime(benchmark::State& state) {
  Natural n = Natural(1'000'000'007) * Natural(1'000'000'009);
  for (auto _ : state) {
    benchmark::DoNotOptimize(factorize(n));
  }
}
BENCHMARK(BM_factorize_semiprime);

static void BM_sqrt_expansion(benchmark::State& state) {
  // periods grow like sqrt(n), so keep the radicand moderate
  Natural n = Natural(1'000'003);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sqrt_expansion(n).period_length());
  }
}
BENCHMARK(BM_sqrt_expansion);

BENCHMARK_MAIN();
