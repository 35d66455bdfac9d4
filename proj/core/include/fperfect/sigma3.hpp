#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fperfect/factorization.hpp"
#include "fperfect/natural.hpp"
#include "fperfect/parallel.hpp"

namespace fperfect::sigma3 {

enum class Shape {
  semiprime_distinct,      // p * q, p < q primes
  two_power_times_prime,   // 2^alpha * p, alpha >= 2, p odd prime
  other,
};

enum class Classification {
  even_perfect,    // 2^(p-1) (2^p - 1), both p and 2^p - 1 prime
  exception_28,    // the one even perfect number failing divisibility
  solution_6,      // vocabulary for the unique dividing semiprime; 6 itself
                   // reports even_perfect (its perfect-number face wins)
  non_dividing,
  other_dividing,
};

const char* to_string(Shape s);
const char* to_string(Classification c);

struct Verdict {
  Natural n;
  bool divisible = false;  // n | sigma_3(n)
  Shape shape = Shape::other;
  Classification classification = Classification::non_dividing;
};

/// Cube-divisor-sum verdict for a single n >= 2.
Verdict classify(const Natural& n, const FactorizeOptions& opts = {});

/// All n = p q <= limit (p < q primes) with n | sigma_3(n), ascending.
std::vector<Natural> scan_semiprimes(std::uint64_t limit,
                                     const ScanOptions& scan = {});

/// All n = 2^alpha p <= limit (alpha >= 1, p odd prime) with
/// n | sigma_3(n), ascending, each with its full verdict.
std::vector<Verdict> scan_two_power_times_prime(std::uint64_t limit,
                                                const ScanOptions& scan = {});

/// Which prime count "two prime factors" means.
enum class OmegaMode { distinct, with_multiplicity };

struct ConjectureReport {
  std::uint64_t limit = 0;
  OmegaMode mode = OmegaMode::distinct;
  std::uint64_t scanned = 0;  // n <= limit with the targeted prime count
  std::vector<Natural> dividing;         // scanned n with n | sigma_3(n)
  std::vector<Natural> counterexamples;  // dividing but not even perfect
  std::vector<Natural> missing_perfect;  // even perfect != 28 not dividing
};

/// Scan for witnesses against "two prime factors and n | sigma_3(n)
/// exactly at the even perfect numbers other than 28". Counterexamples
/// are returned as data, never asserted away.
ConjectureReport conjecture_scan(std::uint64_t limit,
                                 OmegaMode mode = OmegaMode::distinct,
                                 const ScanOptions& scan = {});

/// Prime pairs p < q <= limit with p | q+1 and q | p+1.
std::vector<std::pair<std::uint64_t, std::uint64_t>> successor_divisor_primes(
    std::uint64_t limit);

struct QuotientRecord {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  std::uint64_t quotient = 0;  // (x^2 - x + 1) / (x y - 1)
};

/// All x <= x_limit, 2 <= y <= y_limit with x y - 1 dividing
/// x^2 - x + 1. Requires y_limit >= 2.
std::vector<QuotientRecord> quadratic_quotient_scan(std::uint64_t x_limit,
                                                    std::uint64_t y_limit);

/// All 1 <= y <= x <= limit with x | y^2 - y + 1 and y | x^2 - x + 1.
std::vector<std::pair<std::uint64_t, std::uint64_t>> mutual_quadratic_divisors(
    std::uint64_t limit);

}  // namespace fperfect::sigma3
