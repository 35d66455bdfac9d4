#pragma once

#include <cstdint>

#include "fperfect/natural.hpp"

namespace fperfect {

enum class Verdict { composite, provable_prime, probable_prime };

const char* to_string(Verdict v);

struct PrimalityResult {
  Verdict verdict = Verdict::composite;
  unsigned witness_rounds = 0;  // probabilistic rounds actually run

  bool prime() const { return verdict != Verdict::composite; }
};

struct PrimalityOptions {
  unsigned rounds = 40;    // random strong-pseudoprime rounds above 2^64
  std::uint64_t seed = 0;  // 0 selects the fixed default seed
};

/// Primality battery. Below 2^64 the verdict is deterministic (trial
/// division plus a fixed strong-pseudoprime base set); above, a base-2
/// strong test and a strong Lucas test are followed by `rounds` random
/// strong-pseudoprime rounds and the verdict is at best probable-prime.
PrimalityResult is_prime(const Natural& n, const PrimalityOptions& opts = {});

}  // namespace fperfect
