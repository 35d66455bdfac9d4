#include "fperfect/sigma3.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fperfect/primality.hpp"
#include "fperfect/sieve.hpp"

namespace fperfect::sigma3 {

namespace {

using u128 = unsigned __int128;

std::uint64_t isqrt_u64(std::uint64_t n) {
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

u128 sigma3_u128(const SmallFactor* f, unsigned cnt) {
  u128 total = 1;
  for (unsigned i = 0; i < cnt; ++i) {
    u128 p3 = u128(f[i].prime) * f[i].prime * f[i].prime;
    u128 term = 1, power = 1;
    for (unsigned e = 0; e < f[i].exponent; ++e) {
      power *= p3;
      term += power;
    }
    total *= term;
  }
  return total;
}

Natural sigma3_mpz(const Factorization& f) {
  Natural total = 1;
  for (const PrimePower& pp : f.factors) {
    Natural p3 = pp.prime * pp.prime * pp.prime;
    Natural term = 1, power = 1;
    for (unsigned e = 0; e < pp.exponent; ++e) {
      power *= p3;
      term += power;
    }
    total *= term;
  }
  return total;
}

bool even_perfect_form(const Factorization& f) {
  if (f.factors.size() != 2) return false;
  const PrimePower& two = f.factors[0];
  const PrimePower& odd = f.factors[1];
  if (two.prime != 2 || odd.exponent != 1) return false;
  // 2^alpha (2^(alpha+1) - 1) with the odd part prime; a prime Mersenne
  // number forces a prime exponent, so this is the full perfect form.
  return odd.prime == pow_ui(Natural(2), two.exponent + 1) - 1;
}

/// Even perfect numbers <= limit, ascending.
std::vector<std::uint64_t> even_perfects_upto(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (unsigned p = 2; p <= 31; ++p) {
    u128 m = (u128{1} << p) - 1;
    u128 n = (u128{1} << (p - 1)) * m;
    if (n > limit) break;
    if (is_prime(Natural(static_cast<unsigned long>(m))).prime()) {
      out.push_back(static_cast<std::uint64_t>(n));
    }
  }
  return out;
}

}  // namespace

const char* to_string(Shape s) {
  switch (s) {
    case Shape::semiprime_distinct: return "semiprime-distinct";
    case Shape::two_power_times_prime: return "two-power-times-prime";
    case Shape::other: return "other";
  }
  return "other";
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::even_perfect: return "even-perfect";
    case Classification::exception_28: return "the-exception-28";
    case Classification::solution_6: return "the-solution-6";
    case Classification::non_dividing: return "non-dividing";
    case Classification::other_dividing: return "other-dividing";
  }
  return "non-dividing";
}

Verdict classify(const Natural& n, const FactorizeOptions& opts) {
  if (n < 2) throw std::domain_error("classify: n must be >= 2");
  Verdict v;
  v.n = n;
  Factorization f = factorize(n, opts);
  Natural s3 = sigma3_mpz(f);
  v.divisible = mpz_divisible_p(s3.get_mpz_t(), n.get_mpz_t()) != 0;

  if (f.factors.size() == 2 && f.factors[0].exponent == 1 &&
      f.factors[1].exponent == 1) {
    v.shape = Shape::semiprime_distinct;
  } else if (f.factors.size() == 2 && f.factors[0].prime == 2 &&
             f.factors[1].exponent == 1) {
    v.shape = Shape::two_power_times_prime;
  } else {
    v.shape = Shape::other;
  }

  if (n == 28) {
    v.classification = Classification::exception_28;
  } else if (even_perfect_form(f)) {
    v.classification = Classification::even_perfect;
  } else if (v.divisible) {
    v.classification = Classification::other_dividing;
  } else {
    v.classification = Classification::non_dividing;
  }
  return v;
}

std::vector<Natural> scan_semiprimes(std::uint64_t limit,
                                     const ScanOptions& scan) {
  std::vector<Natural> out;
  if (limit < 6) return out;
  PrimeSieve sieve(limit / 2);
  const std::vector<std::uint64_t> primes = sieve.primes();
  const std::uint64_t root = isqrt_u64(limit);
  const std::uint64_t p_count =
      std::upper_bound(primes.begin(), primes.end(), root) - primes.begin();

  auto hits = scan_collect<std::uint64_t>(
      0, p_count, 16, scan, [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::uint64_t> found;
        for (std::uint64_t i = lo; i < hi; ++i) {
          const std::uint64_t p = primes[i];
          const std::uint64_t q_max = limit / p;
          const u128 ps = 1 + u128(p) * p * p;
          for (std::size_t j = i + 1; j < primes.size() && primes[j] <= q_max;
               ++j) {
            const std::uint64_t q = primes[j];
            const u128 s = ps * (1 + u128(q) * q * q);
            if (s % (u128(p) * q) == 0) found.push_back(p * q);
          }
        }
        return found;
      });
  std::sort(hits.begin(), hits.end());
  out.reserve(hits.size());
  for (std::uint64_t n : hits) out.emplace_back(static_cast<unsigned long>(n));
  return out;
}

std::vector<Verdict> scan_two_power_times_prime(std::uint64_t limit,
                                                const ScanOptions& scan) {
  std::vector<Verdict> out;
  if (limit < 6) return out;
  PrimeSieve sieve(limit / 2);
  std::vector<std::uint64_t> survivors;
  for (unsigned alpha = 1; alpha < 63; ++alpha) {
    const std::uint64_t two_a = std::uint64_t{1} << alpha;
    if (two_a > limit / 3) break;
    const std::uint64_t p_max = limit / two_a;
    const u128 s2 = ((u128{1} << (3 * (alpha + 1))) - 1) / 7;
    auto part = scan_collect<std::uint64_t>(
        3, p_max + 1, 1 << 20, scan, [&](std::uint64_t lo, std::uint64_t hi) {
          std::vector<std::uint64_t> found;
          for (std::uint64_t p = lo | 1; p < hi; p += 2) {
            if (!sieve.is_prime(p)) continue;
            const u128 s = s2 * (1 + u128(p) * p * p);
            const std::uint64_t n = two_a * p;
            if (s % n == 0) found.push_back(n);
          }
          return found;
        });
    survivors.insert(survivors.end(), part.begin(), part.end());
  }
  std::sort(survivors.begin(), survivors.end());
  out.reserve(survivors.size());
  for (std::uint64_t n : survivors) {
    out.push_back(classify(Natural(static_cast<unsigned long>(n))));
  }
  return out;
}

ConjectureReport conjecture_scan(std::uint64_t limit, OmegaMode mode,
                                 const ScanOptions& scan) {
  ConjectureReport report;
  report.limit = limit;
  report.mode = mode;
  if (limit < 2) return report;
  SpfSieve spf = checked_spf(limit);
  const std::vector<std::uint64_t> perfects = even_perfects_upto(limit);

  struct Chunk {
    std::uint64_t scanned = 0;
    std::vector<std::uint64_t> dividing;
  };
  auto chunks = scan_chunks<Chunk>(
      2, limit + 1, 1 << 16, scan, [&](std::uint64_t lo, std::uint64_t hi) {
        Chunk c;
        SmallFactor f[kMaxSmallFactors];
        for (std::uint64_t n = lo; n < hi; ++n) {
          const unsigned cnt = spf.factor(static_cast<std::uint32_t>(n), f);
          unsigned omega = cnt;
          if (mode == OmegaMode::with_multiplicity) {
            omega = 0;
            for (unsigned i = 0; i < cnt; ++i) omega += f[i].exponent;
          }
          if (omega != 2) continue;
          ++c.scanned;
          if (sigma3_u128(f, cnt) % n == 0) c.dividing.push_back(n);
        }
        return c;
      });

  std::vector<std::uint64_t> dividing;
  for (const Chunk& c : chunks) {
    report.scanned += c.scanned;
    dividing.insert(dividing.end(), c.dividing.begin(), c.dividing.end());
  }
  for (std::uint64_t n : dividing) {
    report.dividing.emplace_back(static_cast<unsigned long>(n));
    if (!std::binary_search(perfects.begin(), perfects.end(), n)) {
      report.counterexamples.emplace_back(static_cast<unsigned long>(n));
    }
  }
  SmallFactor f[kMaxSmallFactors];
  for (std::uint64_t e : perfects) {
    if (e == 28) continue;
    const unsigned cnt = spf.factor(static_cast<std::uint32_t>(e), f);
    if (sigma3_u128(f, cnt) % e != 0) {
      report.missing_perfect.emplace_back(static_cast<unsigned long>(e));
    }
  }
  return report;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> successor_divisor_primes(
    std::uint64_t limit) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  if (limit < 3) return out;
  PrimeSieve sieve(limit);
  const std::vector<std::uint64_t> primes = sieve.primes();
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::uint64_t p = primes[i];
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      const std::uint64_t q = primes[j];
      if (q > p + 1) break;  // q | p+1 needs q <= p+1
      if ((q + 1) % p == 0 && (p + 1) % q == 0) out.emplace_back(p, q);
    }
  }
  return out;
}

std::vector<QuotientRecord> quadratic_quotient_scan(std::uint64_t x_limit,
                                                    std::uint64_t y_limit) {
  if (y_limit < 2) {
    throw std::domain_error("quadratic_quotient_scan: y_limit must be >= 2");
  }
  std::vector<QuotientRecord> out;
  for (std::uint64_t x = 1; x <= x_limit; ++x) {
    const u128 v = u128(x) * x - x + 1;
    for (std::uint64_t y = 2; y <= y_limit; ++y) {
      const u128 d = u128(x) * y - 1;
      if (d > v) break;  // 0 < v < d cannot divide
      if (v % d == 0) {
        out.push_back({x, y, static_cast<std::uint64_t>(v / d)});
      }
    }
  }
  return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> mutual_quadratic_divisors(
    std::uint64_t limit) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t x = 1; x <= limit; ++x) {
    const u128 xq = u128(x) * x - x + 1;
    for (std::uint64_t y = 1; y <= x; ++y) {
      const u128 yq = u128(y) * y - y + 1;
      if (yq % x == 0 && xq % y == 0) out.emplace_back(x, y);
    }
  }
  return out;
}

}  // namespace fperfect::sigma3
