#pragma once

#include <cstdint>
#include <vector>

namespace fperfect {

/// Bit-packed sieve of Eratosthenes over [0, limit].
class PrimeSieve {
 public:
  explicit PrimeSieve(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }

  bool is_prime(std::uint64_t n) const {
    return n <= limit_ && (bits_[n >> 6] >> (n & 63)) & 1;
  }

  std::vector<std::uint64_t> primes() const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint64_t> bits_;  // bit n set <=> n prime
};

struct SmallFactor {
  std::uint32_t prime = 0;
  std::uint32_t exponent = 0;
};

/// Any n < 2^32 has at most 9 distinct prime factors: the product of
/// the first ten primes (6469693230) already exceeds 2^32.
inline constexpr unsigned kMaxSmallFactors = 9;

/// Practical SpfSieve ceiling: 4 bytes per entry means 400 MB here.
inline constexpr std::uint64_t kSpfSieveCap = 100'000'000;

/// Smallest-prime-factor table over [2, limit]; 4 bytes per entry, so
/// practical up to ~10^8. Gives O(log n) factorization per lookup.
class SpfSieve {
 public:
  explicit SpfSieve(std::uint32_t limit);

  std::uint32_t limit() const { return limit_; }

  std::uint32_t spf(std::uint32_t n) const { return spf_[n]; }

  bool is_prime(std::uint32_t n) const { return n >= 2 && spf_[n] == n; }

  /// Fills out[0..] ascending by prime; returns the distinct count.
  unsigned factor(std::uint32_t n, SmallFactor out[kMaxSmallFactors]) const;

 private:
  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
};

/// SpfSieve constructor with a range check against kSpfSieveCap;
/// refuses oversized scans instead of thrashing.
SpfSieve checked_spf(std::uint64_t limit);

}  // namespace fperfect
