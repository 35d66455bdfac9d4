#include "fperfect/factorization.hpp"

#include <algorithm>
#include <map>

namespace fperfect {
namespace {

constexpr std::uint64_t kDefaultSeed = 0xc2b2ae3d27d4eb4fULL;

class RhoState {
 public:
  explicit RhoState(std::uint64_t seed, std::uint64_t budget)
      : budget_(budget) {
    gmp_randinit_mt(state_);
    gmp_randseed_ui(state_, seed == 0 ? kDefaultSeed : seed);
  }
  ~RhoState() { gmp_randclear(state_); }
  RhoState(const RhoState&) = delete;
  RhoState& operator=(const RhoState&) = delete;

  Natural random_below(const Natural& n) {
    Natural r;
    mpz_urandomm(r.get_mpz_t(), state_, n.get_mpz_t());
    return r;
  }

  void spend(std::uint64_t iterations) {
    if (iterations > budget_)
      throw budget_exceeded("factorization budget exceeded");
    budget_ -= iterations;
  }

 private:
  gmp_randstate_t state_;
  std::uint64_t budget_;
};

// Brent's cycle-finding variant of Pollard rho with batched gcds.
// Returns a nontrivial factor of composite odd n.
Natural pollard_brent(const Natural& n, RhoState& rho) {
  constexpr std::uint64_t kBatch = 128;
  for (;;) {
    Natural y = rho.random_below(n);
    Natural c = rho.random_below(n) + 1;
    Natural g(1), q(1), x, ys;
    std::uint64_t r = 1;
    while (g == 1) {
      x = y;
      rho.spend(r);
      for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
      for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        const std::uint64_t lim = std::min(kBatch, r - k);
        rho.spend(lim);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = (q * abs(x - y)) % n;
        }
        g = gcd(q, n);
      }
      r *= 2;
    }
    if (g == n) {
      // The batch overshot; walk the saved point one step at a time.
      do {
        ys = (ys * ys + c) % n;
        rho.spend(1);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Natural& value, unsigned long multiplicity,
                 std::map<Natural, unsigned long>& out,
                 const FactorizeOptions& opts, RhoState& rho) {
  if (value == 1) return;
  if (is_prime(value, opts.primality).prime()) {
    out[value] += multiplicity;
    return;
  }
  if (mpz_perfect_power_p(value.get_mpz_t())) {
    // value = root^k for some k >= 2; reduce to the smallest base.
    for (unsigned long k = 2;; ++k) {
      Natural root;
      if (mpz_root(root.get_mpz_t(), value.get_mpz_t(), k) != 0) {
        factor_into(root, multiplicity * k, out, opts, rho);
        return;
      }
      if (root <= 1) break;
    }
  }
  Natural f = pollard_brent(value, rho);
  factor_into(f, multiplicity, out, opts, rho);
  factor_into(value / f, multiplicity, out, opts, rho);
}

}  // namespace

unsigned long Factorization::total_prime_count() const {
  unsigned long total = 0;
  for (const auto& pp : factors) total += pp.exponent;
  return total;
}

Factorization factorize(const Natural& n, const FactorizeOptions& opts) {
  if (n < 2) throw std::domain_error("factorize requires n >= 2");

  std::map<Natural, unsigned long> acc;
  Natural m = n;

  const mp_bitcnt_t twos = mpz_scan1(m.get_mpz_t(), 0);
  if (twos > 0) {
    acc[Natural(2)] = twos;
    m >>= twos;
  }
  Natural root = isqrt(m);
  for (unsigned long d = 3; d <= opts.trial_bound && root >= d; d += 2) {
    if (!mpz_divisible_ui_p(m.get_mpz_t(), d)) continue;
    unsigned long e = 0;
    do {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
      ++e;
    } while (mpz_divisible_ui_p(m.get_mpz_t(), d));
    acc[Natural(d)] = e;
    root = isqrt(m);
  }
  if (m > 1) {
    if (Natural(opts.trial_bound) * opts.trial_bound >= m) {
      acc[m] += 1;  // below the trial square, the remainder is prime
    } else {
      RhoState rho(opts.seed, opts.rho_budget);
      factor_into(m, 1, acc, opts, rho);
    }
  }

  Factorization result;
  result.n = n;
  Natural check(1);
  for (const auto& [p, e] : acc) {
    result.factors.push_back({p, static_cast<unsigned>(e)});
    check *= pow_ui(p, e);
  }
  if (check != n) throw std::logic_error("factorization product check failed");
  return result;
}

Natural sigma(unsigned a, const Natural& n, const FactorizeOptions& opts) {
  if (a == 0) throw std::domain_error("sigma requires a >= 1");
  if (n < 1) throw std::domain_error("sigma requires n >= 1");
  if (n == 1) return Natural(1);

  Natural result(1);
  for (const auto& pp : factorize(n, opts).factors) {
    const Natural p_a = pow_ui(pp.prime, a);
    Natural term(1), power(1);
    for (unsigned j = 0; j < pp.exponent; ++j) {
      power *= p_a;
      term += power;
    }
    result *= term;
  }
  return result;
}

Natural proper_power_sum(unsigned a, const Natural& n,
                         const FactorizeOptions& opts) {
  return sigma(a, n, opts) - pow_ui(n, a);
}

}  // namespace fperfect
