#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <stdexcept>

#include "fperfect/factorization.hpp"
#include "fperfect/fibonacci.hpp"
#include "fperfect/natural.hpp"
#include "fperfect/primality.hpp"
#include "oracles.hpp"

using namespace fperfect;

namespace {
Natural mersenne(unsigned p) { return (Natural(1) << p) - 1; }
}  // namespace

TEST_CASE("decimal parsing and printing") {
  CHECK(parse_natural("0") == 0);
  CHECK(parse_natural("20737") == 20737);
  CHECK(parse_natural("007") == 7);
  CHECK(to_decimal(parse_natural("987654321987654321987654321")) ==
        "987654321987654321987654321");
  CHECK_THROWS_AS(parse_natural(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_natural("12a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_natural("-5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_natural(" 5"), std::invalid_argument);
  CHECK(decimal_digits(Natural(1)) == 1);
  CHECK(decimal_digits(Natural(9)) == 1);
  CHECK(decimal_digits(Natural(10)) == 2);
  CHECK(decimal_digits(Natural(999)) == 3);
  CHECK(decimal_digits(Natural(1000)) == 4);
}

TEST_CASE("integer square root") {
  for (std::uint64_t n = 0; n <= 20000; ++n) {
    Natural r = isqrt(Natural(n));
    CHECK(r == oracle::sqrt_floor(n));
  }
  Natural big = parse_natural("123456789123456789123456789");
  Natural r = isqrt(big * big);
  CHECK(r == big);
  CHECK(isqrt(big * big - 1) == big - 1);
  CHECK(isqrt(big * big + 1) == big);
  CHECK(is_perfect_square(big * big));
  CHECK_FALSE(is_perfect_square(big * big + 1));
  CHECK(is_perfect_square(Natural(0)));
  CHECK(is_perfect_square(Natural(1)));
  CHECK_FALSE(is_perfect_square(Natural(2)));
}

TEST_CASE("primality agrees with a sieve up to 10^6") {
  const std::uint64_t limit = 1'000'000;
  auto table = oracle::prime_table(limit);
  for (std::uint64_t n = 0; n <= limit; ++n) {
    PrimalityResult r = is_prime(Natural(n));
    if (r.prime() != table[n]) {
      CAPTURE(n);
      REQUIRE(r.prime() == table[n]);
    }
    if (table[n]) {
      // everything 64-bit must come back with a deterministic verdict
      CHECK(r.verdict == Verdict::provable_prime);
    }
  }
}

TEST_CASE("primality verdicts across the deterministic threshold") {
  CHECK(is_prime(Natural(2)).verdict == Verdict::provable_prime);
  CHECK(is_prime(Natural(0)).verdict == Verdict::composite);
  CHECK(is_prime(Natural(1)).verdict == Verdict::composite);
  CHECK(is_prime(Natural(561)).verdict == Verdict::composite);  // Carmichael

  // Mersenne exponents 61, 89, 107, 127 give primes; 11, 67, 101 do not.
  CHECK(is_prime(mersenne(61)).verdict == Verdict::provable_prime);
  CHECK(is_prime(mersenne(89)).verdict == Verdict::probable_prime);
  CHECK(is_prime(mersenne(107)).verdict == Verdict::probable_prime);
  CHECK(is_prime(mersenne(127)).verdict == Verdict::probable_prime);
  CHECK(is_prime(mersenne(11)).verdict == Verdict::composite);
  CHECK(is_prime(mersenne(67)).verdict == Verdict::composite);
  CHECK(is_prime(mersenne(101)).verdict == Verdict::composite);

  CHECK(is_prime(mersenne(89) * mersenne(89)).verdict == Verdict::composite);
  CHECK(is_prime(mersenne(89) * mersenne(107)).verdict == Verdict::composite);

  PrimalityResult above = is_prime(mersenne(127), {12, 0});
  CHECK(above.verdict == Verdict::probable_prime);
  CHECK(above.witness_rounds >= 1);
  PrimalityResult below = is_prime(mersenne(61));
  CHECK(below.witness_rounds == 0);

  // same seed, same verdict, repeatedly
  for (int i = 0; i < 3; ++i) {
    PrimalityResult again = is_prime(mersenne(127), {12, 7});
    CHECK(again.verdict == above.verdict);
    CHECK(again.witness_rounds == above.witness_rounds);
  }
}

TEST_CASE("factorization reproduces known splits") {
  Factorization f = factorize(Natural(20737));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == PrimePower{89, 1});
  CHECK(f.factors[1] == PrimePower{233, 1});
  CHECK(f.distinct_prime_count() == 2);
  CHECK(f.total_prime_count() == 2);

  f = factorize(Natural(1024));
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0] == PrimePower{2, 10});
  CHECK(f.total_prime_count() == 10);

  f = factorize(mersenne(11));  // 2047 = 23 * 89
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == PrimePower{23, 1});
  CHECK(f.factors[1] == PrimePower{89, 1});

  // product of factors reproduces n for a mixed case beyond trial division
  Natural n = Natural(1000003) * 1000003 * 999983;
  f = factorize(n);
  Natural back = 1;
  for (const PrimePower& pp : f.factors) {
    back *= pow_ui(pp.prime, pp.exponent);
    CHECK(is_prime(pp.prime).prime());
  }
  CHECK(back == n);

  CHECK_THROWS_AS(factorize(Natural(0)), std::domain_error);
  CHECK_THROWS_AS(factorize(Natural(1)), std::domain_error);
}

TEST_CASE("factorization effort cap raises instead of guessing") {
  FactorizeOptions tight;
  tight.trial_bound = 100;
  tight.rho_budget = 50;
  Natural stubborn = Natural(1'000'000'007) * Natural(1'000'000'009);
  CHECK_THROWS_AS(factorize(stubborn, tight), budget_exceeded);

  // the default budget cracks the same number
  Factorization f = factorize(stubborn);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].prime == 1'000'000'007);
  CHECK(f.factors[1].prime == 1'000'000'009);
}

TEST_CASE("divisor power sums match the all-divisors walk") {
  for (std::uint64_t n = 1; n <= 1500; ++n) {
    for (unsigned a = 1; a <= 3; ++a) {
      Natural expected = oracle::sigma(a, n);
      CHECK(sigma(a, Natural(n)) == expected);
      Natural pn = 1;
      for (unsigned i = 0; i < a; ++i) pn *= n;
      CHECK(proper_power_sum(a, Natural(n)) == expected - pn);
    }
  }
  CHECK(sigma(2, Natural(10)) == 130);
  CHECK(proper_power_sum(2, Natural(10)) == 30);
}

TEST_CASE("Fibonacci and Lucas values match plain addition") {
  auto f = oracle::fib_list(400);
  auto l = oracle::lucas_list(400);
  for (std::size_t i = 0; i <= 400; ++i) {
    CHECK(fib(i) == f[i]);
    CHECK(lucas(i) == l[i]);
  }
  auto [lo, hi] = fib_pair(233);
  CHECK(lo == f[233]);
  CHECK(hi == f[234]);
}

TEST_CASE("Fibonacci membership returns the smallest index") {
  CHECK(fibonacci_index(Natural(1)) == 1);  // F(1) = F(2) = 1
  CHECK(fibonacci_index(Natural(2)) == 3);
  CHECK(fibonacci_index(Natural(5)) == 5);
  CHECK(fibonacci_index(Natural(13)) == 7);
  CHECK(fibonacci_index(Natural(89)) == 11);
  CHECK(fibonacci_index(Natural(233)) == 13);
  CHECK_FALSE(fibonacci_index(Natural(4)).has_value());
  CHECK_FALSE(fibonacci_index(Natural(35)).has_value());
  CHECK_FALSE(fibonacci_index(Natural(20737)).has_value());
  CHECK(fibonacci_index(fib(431)) == 431);
  CHECK_FALSE(fibonacci_index(fib(431) + 1).has_value());
  CHECK_THROWS_AS(fibonacci_index(Natural(0)), std::domain_error);

  auto f = oracle::fib_list(60);
  for (std::size_t i = 3; i <= 60; ++i) {
    CHECK(fibonacci_index(f[i]) == i);
  }
}

TEST_CASE("Cassini identity, indices 1 through 300") {
  for (unsigned long i = 1; i <= 300; ++i) {
    mpz_class lhs = fib(i - 1) * fib(i + 1) - fib(i) * fib(i);
    CHECK(lhs == (i % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("Lucas square identity, indices 1 through 150") {
  for (unsigned long k = 1; k <= 150; ++k) {
    Natural fk = fib(k), lk = lucas(k);
    mpz_class lhs = lk * lk - 5 * fk * fk;
    CHECK(lhs == (k % 2 == 0 ? 4 : -4));
    // the square 5 F^2 +/- 4 is what the membership test looks for
    CHECK(is_perfect_square(5 * fk * fk + (k % 2 == 0 ? 4 : -4)));
  }
}
