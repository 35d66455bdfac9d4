#pragma once

#include <cstdint>
#include <vector>

#include "fperfect/factorization.hpp"
#include "fperfect/natural.hpp"
#include "fperfect/parallel.hpp"
#include "fperfect/primality.hpp"

namespace fperfect {

/// n together with a = the power, b = the quotient such that
/// sigma_a(n) - n^a = b * n.
struct SolutionRecord {
  unsigned a = 2;
  unsigned long b = 0;
  Natural n;
  Factorization factorization;
};

/// Sum of squared proper divisors equals 3n?
bool is_f_perfect(const Natural& n, const FactorizeOptions& opts = {});

/// All n <= limit with sigma_2(n) - n^2 = b n, ascending. Sieve-backed;
/// limit above the supported sieve size -> std::domain_error.
std::vector<SolutionRecord> search_square_sum(unsigned long b,
                                              std::uint64_t limit,
                                              const ScanOptions& scan = {});

/// Completeness cutoffs for the square-sum search, by branch on the
/// number of distinct primes of a hypothetical solution n:
///   - >= 3 distinct primes forces b >= 3 n^(1/3), so n <= b^3/27;
///   - exactly 2 distinct primes forces 2 p1^(a1-1) p2^(a2-1) <= b;
///   - 2 distinct primes, squarefree, turns the equation into
///     1 + p1^2 + p2^2 = b p1 p2, empty for b != 3;
///   - 1 prime power is impossible outright (the divisor sum is 1 mod p).
struct SearchBounds {
  unsigned long b = 0;
  Natural three_prime_cutoff;      // floor(b^3 / 27)
  Natural two_prime_exponent_cap;  // p1^(a1-1) p2^(a2-1) <= floor(b / 2)
  bool squarefree_two_prime_empty = false;  // b != 3
};
SearchBounds square_sum_bounds(unsigned long b);

/// Witness that n = F(2k-1) * F(2k+1) is F-perfect provided the two
/// factors are prime. Primality verdicts may be probabilistic for large
/// k; the product identity 1 + x^2 + y^2 = 3 x y is checked exactly
/// either way, and the square-divisor sum is recomputed from scratch
/// while n stays below a direct-check cap.
struct FPerfectCertificate {
  unsigned long k = 0;
  Natural f_lo;  // F(2k-1)
  Natural f_hi;  // F(2k+1)
  Natural n;     // f_lo * f_hi
  PrimalityResult lo_primality;
  PrimalityResult hi_primality;
  bool identity_checked = false;
  bool direct_checked = false;
};

/// Certificates for every k <= max_k whose two odd-indexed Fibonacci
/// numbers are both non-composite, ascending in k.
std::vector<FPerfectCertificate> generate_certificates(
    unsigned long max_k, const PrimalityOptions& primality = {},
    const ScanOptions& scan = {});

/// All n <= min(limit, floor(b^2/4)) with sigma_a(n) - n^a = b n for
/// a >= 3, ascending. The cutoff is exhaustive: any solution has at
/// least two distinct primes, which forces b >= 2 sqrt(n).
std::vector<SolutionRecord> search_power_sum(unsigned a, unsigned long b,
                                             std::uint64_t limit,
                                             const ScanOptions& scan = {});

/// A quotient value b attained by some n <= the scan limit.
struct BValue {
  Natural b;
  Natural witness;  // smallest attaining n
};

/// Every b such that n divides sigma_a(n) - n^a for some 2 <= n <=
/// n_limit, with the smallest witness, ascending in b. Requires a >= 2.
std::vector<BValue> attainable_b_values(unsigned a, std::uint64_t n_limit,
                                        const ScanOptions& scan = {});

}  // namespace fperfect
