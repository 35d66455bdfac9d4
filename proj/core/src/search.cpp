#include "fperfect/search.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "fperfect/fibonacci.hpp"
#include "fperfect/sieve.hpp"

namespace fperfect {

namespace {

using u128 = unsigned __int128;

// Above this, certificates rely on primality + the exact product
// identity instead of refactoring n.
const Natural kDirectCheckCap = pow_ui(Natural(10), 18);

u128 ipow_u128(u128 base, unsigned exp) {
  u128 r = 1;
  while (exp != 0) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

u128 sigma_u128(const SmallFactor* f, unsigned cnt, unsigned a) {
  u128 total = 1;
  for (unsigned i = 0; i < cnt; ++i) {
    u128 pa = ipow_u128(f[i].prime, a);
    u128 term = 1, power = 1;
    for (unsigned e = 0; e < f[i].exponent; ++e) {
      power *= pa;
      term += power;
    }
    total *= term;
  }
  return total;
}

Natural sigma_mpz(const SmallFactor* f, unsigned cnt, unsigned a) {
  Natural total = 1;
  for (unsigned i = 0; i < cnt; ++i) {
    Natural pa = pow_ui(Natural(f[i].prime), a);
    Natural term = 1, power = 1;
    for (unsigned e = 0; e < f[i].exponent; ++e) {
      power *= pa;
      term += power;
    }
    total *= term;
  }
  return total;
}

Natural natural_from_u128(u128 v) {
  Natural hi(static_cast<unsigned long>(v >> 64));
  return (hi << 64) + Natural(static_cast<unsigned long>(v));
}

// sigma_a(n) < 2 n^a, so the scan stays in 128 bits when a * bits(limit)
// leaves headroom.
bool fits_u128(unsigned a, std::uint64_t limit) {
  unsigned bits = 64 - std::countl_zero(limit | 1);
  return static_cast<std::uint64_t>(a) * bits <= 120;
}

struct SumHit {
  std::uint64_t n = 0;
  Natural s;  // sigma_a(n) - n^a
};

// All n in [2, limit] whose proper power sum s passes pred(s, n),
// ascending. Two predicate signatures: u128 fast path and mpz fallback.
template <typename PredU, typename PredZ>
std::vector<SumHit> scan_proper_sums(unsigned a, const SpfSieve& spf,
                                     std::uint64_t limit,
                                     const ScanOptions& scan, PredU pred_u,
                                     PredZ pred_z) {
  const bool fast = fits_u128(a, limit);
  auto chunk_fn = [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<SumHit> found;
    SmallFactor factors[kMaxSmallFactors];
    for (std::uint64_t n = lo; n < hi; ++n) {
      unsigned cnt = spf.factor(static_cast<std::uint32_t>(n), factors);
      if (fast) {
        u128 s = sigma_u128(factors, cnt, a) - ipow_u128(n, a);
        if (pred_u(s, n)) found.push_back({n, natural_from_u128(s)});
      } else {
        Natural s = sigma_mpz(factors, cnt, a) -
                    pow_ui(Natural(static_cast<unsigned long>(n)), a);
        if (pred_z(s, n)) found.push_back({n, std::move(s)});
      }
    }
    return found;
  };
  return scan_collect<SumHit>(2, limit + 1, 1 << 16, scan, chunk_fn);
}

std::vector<SolutionRecord> hits_to_records(unsigned a, unsigned long b,
                                            const SpfSieve& spf,
                                            const std::vector<SumHit>& hits) {
  std::vector<SolutionRecord> out;
  out.reserve(hits.size());
  SmallFactor factors[kMaxSmallFactors];
  for (const SumHit& h : hits) {
    unsigned cnt = spf.factor(static_cast<std::uint32_t>(h.n), factors);
    Factorization fact;
    fact.n = Natural(static_cast<unsigned long>(h.n));
    for (unsigned i = 0; i < cnt; ++i) {
      fact.factors.push_back({Natural(factors[i].prime), factors[i].exponent});
    }
    out.push_back({a, b, fact.n, std::move(fact)});
  }
  return out;
}

}  // namespace

bool is_f_perfect(const Natural& n, const FactorizeOptions& opts) {
  if (n < 1) throw std::domain_error("is_f_perfect: n must be >= 1");
  return proper_power_sum(2, n, opts) == 3 * n;
}

std::vector<SolutionRecord> search_square_sum(unsigned long b,
                                              std::uint64_t limit,
                                              const ScanOptions& scan) {
  if (b < 1) throw std::domain_error("search_square_sum: b must be positive");
  if (limit < 2) return {};
  SpfSieve spf = checked_spf(limit);
  auto hits = scan_proper_sums(
      2, spf, limit, scan,
      [b](u128 s, std::uint64_t n) { return s == static_cast<u128>(b) * n; },
      [b](const Natural& s, std::uint64_t n) {
        return s == Natural(b) * static_cast<unsigned long>(n);
      });
  return hits_to_records(2, b, spf, hits);
}

SearchBounds square_sum_bounds(unsigned long b) {
  if (b < 1) throw std::domain_error("square_sum_bounds: b must be positive");
  SearchBounds out;
  out.b = b;
  Natural bb(b);
  out.three_prime_cutoff = bb * bb * bb / 27;
  out.two_prime_exponent_cap = bb / 2;
  out.squarefree_two_prime_empty = (b != 3);
  return out;
}

std::vector<FPerfectCertificate> generate_certificates(
    unsigned long max_k, const PrimalityOptions& primality,
    const ScanOptions& scan) {
  if (max_k == 0) return {};
  // Fibonacci numbers at odd indices 1, 3, ..., 2*max_k + 1.
  std::vector<Natural> fib_odd(max_k + 1);
  {
    Natural a = 1, b = 1;  // F(1), F(2)
    fib_odd[0] = a;
    for (unsigned long slot = 1; slot <= max_k; ++slot) {
      Natural c = a + b;  // F(2*slot + 1)
      fib_odd[slot] = c;
      a = c;
      b = b + c;  // F(2*slot + 2)
    }
  }
  // Primality of each odd-indexed Fibonacci number; adjacent k values
  // share one factor, so each number is tested exactly once.
  auto verdict_chunks = scan_chunks<std::vector<PrimalityResult>>(
      0, max_k + 1, 4, scan, [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<PrimalityResult> part;
        part.reserve(hi - lo);
        for (std::uint64_t i = lo; i < hi; ++i) {
          part.push_back(is_prime(fib_odd[i], primality));
        }
        return part;
      });
  std::vector<PrimalityResult> verdicts;
  verdicts.reserve(max_k + 1);
  for (auto& part : verdict_chunks) {
    verdicts.insert(verdicts.end(), part.begin(), part.end());
  }

  std::vector<FPerfectCertificate> out;
  for (unsigned long k = 1; k <= max_k; ++k) {
    const PrimalityResult& lo = verdicts[k - 1];
    const PrimalityResult& hi = verdicts[k];
    if (!lo.prime() || !hi.prime()) continue;
    FPerfectCertificate cert;
    cert.k = k;
    cert.f_lo = fib_odd[k - 1];
    cert.f_hi = fib_odd[k];
    cert.n = cert.f_lo * cert.f_hi;
    cert.lo_primality = lo;
    cert.hi_primality = hi;
    cert.identity_checked =
        1 + cert.f_lo * cert.f_lo + cert.f_hi * cert.f_hi ==
        3 * cert.f_lo * cert.f_hi;
    if (!cert.identity_checked) {
      throw std::logic_error("generate_certificates: product identity failed");
    }
    if (cert.n < kDirectCheckCap) {
      cert.direct_checked = proper_power_sum(2, cert.n) == 3 * cert.n;
    }
    out.push_back(std::move(cert));
  }
  return out;
}

std::vector<SolutionRecord> search_power_sum(unsigned a, unsigned long b,
                                             std::uint64_t limit,
                                             const ScanOptions& scan) {
  if (a < 3) throw std::domain_error("search_power_sum: a must be >= 3");
  if (b < 1) throw std::domain_error("search_power_sum: b must be positive");
  // Any solution has >= 2 distinct primes, forcing b >= 2 sqrt(n).
  Natural cutoff = Natural(b) * b / 4;
  std::uint64_t eff = limit;
  if (cutoff < eff) eff = cutoff.get_ui();
  if (eff < 2) return {};
  SpfSieve spf = checked_spf(eff);
  auto hits = scan_proper_sums(
      a, spf, eff, scan,
      [b](u128 s, std::uint64_t n) { return s == static_cast<u128>(b) * n; },
      [b](const Natural& s, std::uint64_t n) {
        return s == Natural(b) * static_cast<unsigned long>(n);
      });
  return hits_to_records(a, b, spf, hits);
}

std::vector<BValue> attainable_b_values(unsigned a, std::uint64_t n_limit,
                                        const ScanOptions& scan) {
  if (a < 2) throw std::domain_error("attainable_b_values: a must be >= 2");
  if (n_limit < 2) return {};
  SpfSieve spf = checked_spf(n_limit);
  auto hits = scan_proper_sums(
      a, spf, n_limit, scan,
      [](u128 s, std::uint64_t n) { return s != 0 && s % n == 0; },
      [](const Natural& s, std::uint64_t n) {
        return s != 0 && mpz_divisible_ui_p(s.get_mpz_t(),
                                            static_cast<unsigned long>(n));
      });
  // Hits arrive ascending in n, so the first witness per b is smallest.
  std::map<Natural, Natural> by_b;
  for (const SumHit& h : hits) {
    Natural b = h.s / static_cast<unsigned long>(h.n);
    by_b.emplace(std::move(b), Natural(static_cast<unsigned long>(h.n)));
  }
  std::vector<BValue> out;
  out.reserve(by_b.size());
  for (auto& [b, witness] : by_b) out.push_back({b, witness});
  return out;
}

}  // namespace fperfect
