#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fperfect/natural.hpp"
#include "fperfect/sigma3.hpp"
#include "oracles.hpp"

using namespace fperfect;
using sigma3::Classification;
using sigma3::Shape;

namespace {
bool oracle_divides_sigma3(std::uint64_t n) {
  return oracle::sigma(3, n) % n == 0;
}
}  // namespace

TEST_CASE("classification of the landmark values") {
  auto v6 = sigma3::classify(Natural(6));
  CHECK(v6.divisible);
  CHECK(v6.shape == Shape::semiprime_distinct);
  CHECK(v6.classification == Classification::even_perfect);

  auto v28 = sigma3::classify(Natural(28));
  CHECK_FALSE(v28.divisible);
  CHECK(v28.shape == Shape::two_power_times_prime);
  CHECK(v28.classification == Classification::exception_28);

  auto v496 = sigma3::classify(Natural(496));
  CHECK(v496.divisible);
  CHECK(v496.shape == Shape::two_power_times_prime);
  CHECK(v496.classification == Classification::even_perfect);

  auto v8128 = sigma3::classify(Natural(8128));
  CHECK(v8128.divisible);
  CHECK(v8128.classification == Classification::even_perfect);

  auto big = sigma3::classify(Natural(33550336));
  CHECK(big.divisible);
  CHECK(big.classification == Classification::even_perfect);

  // the two shapes the 28-exclusion argument walks through
  auto v14 = sigma3::classify(Natural(14));
  CHECK_FALSE(v14.divisible);
  CHECK(v14.shape == Shape::semiprime_distinct);
  CHECK(v14.classification == Classification::non_dividing);

  auto v56 = sigma3::classify(Natural(56));
  CHECK_FALSE(v56.divisible);
  CHECK(v56.shape == Shape::two_power_times_prime);
  CHECK(v56.classification == Classification::non_dividing);

  auto v2 = sigma3::classify(Natural(2));
  CHECK_FALSE(v2.divisible);
  CHECK(v2.shape == Shape::other);

  CHECK_THROWS_AS(sigma3::classify(Natural(0)), std::domain_error);
  CHECK_THROWS_AS(sigma3::classify(Natural(1)), std::domain_error);
}

TEST_CASE("divisibility flag matches the all-divisors walk") {
  for (std::uint64_t n = 2; n <= 3000; ++n) {
    auto v = sigma3::classify(Natural(n));
    if (v.divisible != oracle_divides_sigma3(n)) {
      CAPTURE(n);
      REQUIRE(v.divisible == oracle_divides_sigma3(n));
    }
  }
}

TEST_CASE("string labels") {
  CHECK(std::string(sigma3::to_string(Shape::semiprime_distinct)) ==
        "semiprime-distinct");
  CHECK(std::string(sigma3::to_string(Shape::two_power_times_prime)) ==
        "two-power-times-prime");
  CHECK(std::string(sigma3::to_string(Shape::other)) == "other");
  CHECK(std::string(sigma3::to_string(Classification::even_perfect)) ==
        "even-perfect");
  CHECK(std::string(sigma3::to_string(Classification::exception_28)) ==
        "the-exception-28");
  CHECK(std::string(sigma3::to_string(Classification::solution_6)) ==
        "the-solution-6");
  CHECK(std::string(sigma3::to_string(Classification::non_dividing)) ==
        "non-dividing");
  CHECK(std::string(sigma3::to_string(Classification::other_dividing)) ==
        "other-dividing");
}

TEST_CASE("semiprime scan: 6 stands alone") {
  auto hits = sigma3::scan_semiprimes(100'000);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0] == 6);

  // against a direct double loop over p < q
  std::vector<Natural> brute;
  for (std::uint64_t p = 2; p * p <= 3000; ++p) {
    if (!oracle::is_prime(p)) continue;
    for (std::uint64_t q = p + 1; p * q <= 3000; ++q) {
      if (!oracle::is_prime(q)) continue;
      if (oracle_divides_sigma3(p * q)) brute.push_back(Natural(p * q));
    }
  }
  REQUIRE(brute.size() == 1);
  CHECK(brute[0] == 6);
}

TEST_CASE("two-power-times-prime scan collects the even perfects") {
  auto verdicts = sigma3::scan_two_power_times_prime(10000);
  REQUIRE(verdicts.size() == 3);
  CHECK(verdicts[0].n == 6);
  CHECK(verdicts[1].n == 496);
  CHECK(verdicts[2].n == 8128);
  for (const auto& v : verdicts) {
    CHECK(v.divisible);
    CHECK(v.classification == Classification::even_perfect);
  }

  // direct sweep over every 2^a * p in range agrees
  for (std::uint64_t a = 1; a <= 11; ++a) {
    std::uint64_t two_a = std::uint64_t(1) << a;
    for (std::uint64_t p = 3; two_a * p <= 10000; p += 2) {
      if (!oracle::is_prime(p)) continue;
      std::uint64_t n = two_a * p;
      bool divides = oracle_divides_sigma3(n);
      bool listed = n == 6 || n == 496 || n == 8128;
      CHECK(divides == listed);
    }
  }
}

TEST_CASE("conjecture scan sees no stray divisors") {
  auto rep = sigma3::conjecture_scan(100'000);
  CHECK(rep.limit == 100'000);
  CHECK(rep.mode == sigma3::OmegaMode::distinct);
  CHECK(rep.scanned == 33759);
  REQUIRE(rep.dividing.size() == 3);
  CHECK(rep.dividing[0] == 6);
  CHECK(rep.dividing[1] == 496);
  CHECK(rep.dividing[2] == 8128);
  CHECK(rep.counterexamples.empty());
  CHECK(rep.missing_perfect.empty());

  // with multiplicity, 496 = 2^4 * 31 no longer has "two prime factors"
  auto strict = sigma3::conjecture_scan(100'000,
                                        sigma3::OmegaMode::with_multiplicity);
  REQUIRE(strict.dividing.size() == 1);
  CHECK(strict.dividing[0] == 6);
  CHECK(strict.counterexamples.empty());
  CHECK(strict.scanned < rep.scanned);

  // scanned counts agree with per-n factor counting on a small window
  auto small = sigma3::conjecture_scan(2000);
  std::uint64_t expected = 0;
  for (std::uint64_t n = 2; n <= 2000; ++n) {
    std::uint64_t m = n, distinct = 0;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
      if (m % p == 0) {
        ++distinct;
        while (m % p == 0) m /= p;
      }
    }
    if (m > 1) ++distinct;
    if (distinct == 2) ++expected;
  }
  CHECK(small.scanned == expected);
}

TEST_CASE("scan caps") {
  CHECK_THROWS_AS(sigma3::conjecture_scan(200'000'000), std::domain_error);
}

TEST_CASE("prime pairs dividing each other's successor") {
  auto pairs = sigma3::successor_divisor_primes(10000);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].first == 2);
  CHECK(pairs[0].second == 3);

  // tiny-range brute force: p < q <= 60, p | q+1 and q | p+1
  std::vector<std::pair<std::uint64_t, std::uint64_t>> brute;
  for (std::uint64_t p = 2; p <= 60; ++p) {
    if (!oracle::is_prime(p)) continue;
    for (std::uint64_t q = p + 1; q <= 60; ++q) {
      if (!oracle::is_prime(q)) continue;
      if ((q + 1) % p == 0 && (p + 1) % q == 0) brute.emplace_back(p, q);
    }
  }
  CHECK(brute == pairs);
}

TEST_CASE("quadratic quotient is always one") {
  auto records = sigma3::quadratic_quotient_scan(200, 200);
  REQUIRE(!records.empty());
  for (const auto& r : records) {
    CHECK(r.quotient == 1);
    CHECK((std::uint64_t(r.x) * r.x - r.x + 1) ==
          r.quotient * (std::uint64_t(r.x) * r.y - 1));
  }
  CHECK(records[0].x == 1);
  CHECK(records[0].y == 2);
  CHECK(records[1].x == 2);
  CHECK(records[1].y == 2);

  // full triple cross-check on a small box
  std::vector<sigma3::QuotientRecord> brute;
  for (std::uint64_t x = 1; x <= 60; ++x) {
    for (std::uint64_t y = 2; y <= 60; ++y) {
      std::uint64_t num = x * x - x + 1, den = x * y - 1;
      if (num % den == 0) brute.push_back({x, y, num / den});
    }
  }
  auto small = sigma3::quadratic_quotient_scan(60, 60);
  REQUIRE(small.size() == brute.size());
  for (std::size_t i = 0; i < brute.size(); ++i) {
    CHECK(small[i].x == brute[i].x);
    CHECK(small[i].y == brute[i].y);
    CHECK(small[i].quotient == brute[i].quotient);
  }

  CHECK_THROWS_AS(sigma3::quadratic_quotient_scan(10, 1), std::domain_error);
}

TEST_CASE("mutual quadratic divisibility pins (1, 1)") {
  auto pairs = sigma3::mutual_quadratic_divisors(400);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].first == 1);
  CHECK(pairs[0].second == 1);

  std::vector<std::pair<std::uint64_t, std::uint64_t>> brute;
  for (std::uint64_t x = 1; x <= 100; ++x) {
    for (std::uint64_t y = 1; y <= x; ++y) {
      if ((y * y - y + 1) % x == 0 && (x * x - x + 1) % y == 0) {
        brute.emplace_back(x, y);
      }
    }
  }
  CHECK(brute == sigma3::mutual_quadratic_divisors(100));
}
