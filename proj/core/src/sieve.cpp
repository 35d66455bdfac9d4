#include "fperfect/sieve.hpp"

#include <stdexcept>

namespace fperfect {

PrimeSieve::PrimeSieve(std::uint64_t limit) : limit_(limit) {
  bits_.assign((limit_ >> 6) + 1, ~std::uint64_t{0});
  auto clear = [&](std::uint64_t n) { bits_[n >> 6] &= ~(std::uint64_t{1} << (n & 63)); };
  clear(0);
  if (limit_ >= 1) clear(1);
  for (std::uint64_t p = 2; p * p <= limit_; ++p) {
    if (!is_prime(p)) continue;
    for (std::uint64_t m = p * p; m <= limit_; m += p) clear(m);
  }
}

std::vector<std::uint64_t> PrimeSieve::primes() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit_; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

SpfSieve::SpfSieve(std::uint32_t limit) : limit_(limit) {
  spf_.assign(static_cast<std::size_t>(limit_) + 1, 0);
  for (std::uint32_t i = 2; i <= limit_; ++i) spf_[i] = i & 1 ? 0 : 2;
  if (limit_ >= 2) spf_[2] = 2;
  for (std::uint32_t p = 3; static_cast<std::uint64_t>(p) * p <= limit_; p += 2) {
    if (spf_[p] != 0) continue;  // p composite, already marked
    spf_[p] = p;
    for (std::uint64_t m = static_cast<std::uint64_t>(p) * p; m <= limit_; m += 2 * p) {
      if (spf_[m] == 0) spf_[m] = p;
    }
  }
  // Remaining zeros are odd primes above sqrt(limit).
  for (std::uint32_t i = 3; i <= limit_; i += 2) {
    if (spf_[i] == 0) spf_[i] = i;
  }
}

SpfSieve checked_spf(std::uint64_t limit) {
  if (limit > kSpfSieveCap) {
    throw std::domain_error(
        "scan limit exceeds the supported sieve size (10^8)");
  }
  return SpfSieve(static_cast<std::uint32_t>(limit));
}

unsigned SpfSieve::factor(std::uint32_t n, SmallFactor out[kMaxSmallFactors]) const {
  if (n < 2 || n > limit_) {
    throw std::domain_error("SpfSieve::factor: n out of sieve range");
  }
  unsigned count = 0;
  while (n > 1) {
    std::uint32_t p = spf_[n];
    std::uint32_t e = 0;
    do {
      n /= p;
      ++e;
    } while (n % p == 0);
    out[count++] = SmallFactor{p, e};
  }
  return count;
}

}  // namespace fperfect
