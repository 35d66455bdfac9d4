#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fperfect/natural.hpp"
#include "fperfect/primality.hpp"

namespace fperfect {

/// Raised when the configured factorization effort cap is hit. The caller
/// may skip the input or retry with a larger budget; a partial or wrong
/// factorization is never returned.
class budget_exceeded : public std::runtime_error {
 public:
  explicit budget_exceeded(const std::string& what)
      : std::runtime_error(what) {}
};

struct PrimePower {
  Natural prime;
  unsigned exponent = 0;

  bool operator==(const PrimePower&) const = default;
};

/// Prime factorization with strictly increasing primes; the product of
/// prime^exponent reproduces n (checked on construction).
struct Factorization {
  Natural n;
  std::vector<PrimePower> factors;

  std::size_t distinct_prime_count() const { return factors.size(); }
  unsigned long total_prime_count() const;
};

struct FactorizeOptions {
  std::uint64_t trial_bound = 1'000'000;  // trial-division cutoff
  std::uint64_t rho_budget = 50'000'000;  // rho iterations before giving up
  std::uint64_t seed = 0;                 // 0 selects the fixed default seed
  PrimalityOptions primality = {};
};

/// Deterministic for a fixed seed. Throws std::domain_error for n < 2 and
/// budget_exceeded when the rho effort cap is reached.
Factorization factorize(const Natural& n, const FactorizeOptions& opts = {});

/// Sum of the a-th powers of all divisors of n (n >= 1, a >= 1), computed
/// multiplicatively with per-prime geometric sums in exact arithmetic.
Natural sigma(unsigned a, const Natural& n, const FactorizeOptions& opts = {});

/// sigma(a, n) - n^a: the power sum over proper divisors only.
Natural proper_power_sum(unsigned a, const Natural& n,
                         const FactorizeOptions& opts = {});

}  // namespace fperfect
