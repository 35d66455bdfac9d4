#include "fperfect/primality.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace fperfect {
namespace {

constexpr std::uint64_t kDefaultSeed = 0x9e3779b97f4a7c15ULL;

// Primes below 1000; composites under 10^6 always have a factor here.
const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<unsigned long> out;
    std::array<bool, 1000> sieve{};
    for (unsigned long i = 2; i < sieve.size(); ++i) {
      if (sieve[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j < sieve.size(); j += i) sieve[j] = true;
    }
    return out;
  }();
  return primes;
}

// Strong-pseudoprime bases covering every n < 3.3*10^24, well past 2^64.
constexpr std::array<unsigned long, 12> kDeterministicBases = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// True when `a` proves n composite. Expects n odd, n > 3, d odd with
// n - 1 = d * 2^s.
bool mr_witness(const Natural& n, const Natural& a, const Natural& d,
                mp_bitcnt_t s) {
  Natural x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Natural n_minus_1 = n - 1;
  if (x == 1 || x == n_minus_1) return false;
  for (mp_bitcnt_t i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n_minus_1) return false;
    if (x == 1) return true;
  }
  return true;
}

void halve_mod(Natural& x, const Natural& n) {
  if (mpz_odd_p(x.get_mpz_t())) x += n;
  x >>= 1;
}

// Strong Lucas probable-prime test with Selfridge parameters (P = 1,
// Q = (1 - D)/4, D the first of 5, -7, 9, -11, ... with Jacobi(D, n) = -1).
// Expects n odd, coprime to small primes, and not a perfect square.
bool strong_lucas_probable_prime(const Natural& n) {
  long d_val = 5;
  for (int sign = 1;; sign = -sign, d_val += 2) {
    Natural d(sign > 0 ? d_val : -d_val);
    const int j = mpz_jacobi(d.get_mpz_t(), n.get_mpz_t());
    if (j == -1) {
      d_val = sign > 0 ? d_val : -d_val;
      break;
    }
    if (j == 0) return false;  // shares a factor with n (n > |D| here)
  }

  const Natural d_param(d_val);
  Natural q = Natural(1 - d_val) / 4;
  Natural q_mod = q % n;
  if (q_mod < 0) q_mod += n;

  const Natural delta = n + 1;
  const mp_bitcnt_t s = mpz_scan1(delta.get_mpz_t(), 0);
  const Natural ladder = delta >> s;  // odd part of n + 1

  // Binary ladder for U_k, V_k, Q^k (mod n), msb of `ladder` first.
  Natural u(1), v(1), qk(q_mod);
  const std::size_t bits = mpz_sizeinbase(ladder.get_mpz_t(), 2);
  for (std::size_t i = bits - 1; i-- > 0;) {
    u = (u * v) % n;
    v = (v * v - 2 * qk) % n;
    if (v < 0) v += n;
    qk = (qk * qk) % n;
    if (mpz_tstbit(ladder.get_mpz_t(), i)) {
      Natural u_next = u + v;              // P*U + V with P = 1
      Natural v_next = d_param * u + v;    // D*U + P*V
      u_next %= n;
      v_next %= n;
      if (u_next < 0) u_next += n;
      if (v_next < 0) v_next += n;
      halve_mod(u_next, n);
      halve_mod(v_next, n);
      u = u_next % n;
      v = v_next % n;
      qk = (qk * q_mod) % n;
    }
  }

  if (u == 0) return true;
  if (v == 0) return true;
  for (mp_bitcnt_t r = 1; r < s; ++r) {
    v = (v * v - 2 * qk) % n;
    if (v < 0) v += n;
    qk = (qk * qk) % n;
    if (v == 0) return true;
  }
  return false;
}

class RandState {
 public:
  explicit RandState(std::uint64_t seed) {
    gmp_randinit_mt(state_);
    gmp_randseed_ui(state_, seed == 0 ? kDefaultSeed : seed);
  }
  ~RandState() { gmp_randclear(state_); }
  RandState(const RandState&) = delete;
  RandState& operator=(const RandState&) = delete;

  // Uniform in [2, n - 2].
  Natural base_below(const Natural& n) {
    Natural span = n - 3;
    Natural r;
    mpz_urandomm(r.get_mpz_t(), state_, span.get_mpz_t());
    return r + 2;
  }

 private:
  gmp_randstate_t state_;
};

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::composite: return "composite";
    case Verdict::provable_prime: return "provable-prime";
    case Verdict::probable_prime: return "probable-prime";
  }
  return "composite";
}

PrimalityResult is_prime(const Natural& n, const PrimalityOptions& opts) {
  if (n < 2) return {Verdict::composite, 0};

  for (unsigned long p : small_primes()) {
    if (n == p) return {Verdict::provable_prime, 0};
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return {Verdict::composite, 0};
  }
  if (n < 1000ul * 1000ul) return {Verdict::provable_prime, 0};

  const Natural n_minus_1 = n - 1;
  const mp_bitcnt_t s = mpz_scan1(n_minus_1.get_mpz_t(), 0);
  const Natural d = n_minus_1 >> s;

  if (mpz_fits_ulong_p(n.get_mpz_t()) || mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
    for (unsigned long b : kDeterministicBases) {
      if (mr_witness(n, Natural(b), d, s)) return {Verdict::composite, 0};
    }
    return {Verdict::provable_prime, 0};
  }

  if (is_perfect_square(n)) return {Verdict::composite, 0};
  if (mr_witness(n, Natural(2), d, s)) return {Verdict::composite, 0};
  if (!strong_lucas_probable_prime(n)) return {Verdict::composite, 0};

  const unsigned rounds = opts.rounds == 0 ? 1 : opts.rounds;
  RandState rng(opts.seed);
  for (unsigned i = 0; i < rounds; ++i) {
    if (mr_witness(n, rng.base_below(n), d, s))
      return {Verdict::composite, i + 1};
  }
  return {Verdict::probable_prime, rounds};
}

}  // namespace fperfect
