#include "fperfect/contfrac.hpp"

#include <stdexcept>

namespace fperfect {

SurdExpansion sqrt_expansion(const Natural& n) {
  if (n < 2) throw std::domain_error("sqrt_expansion: n must be >= 2");
  if (is_perfect_square(n)) {
    throw std::domain_error("sqrt_expansion: n must not be a perfect square");
  }
  SurdExpansion e;
  e.n = n;
  e.a0 = isqrt(n);

  // States (P, Q) with x_k = (sqrt(n) + P) / Q; a = floor(x), then
  //   P' = a Q - P,  Q' = (n - P'^2) / Q   (always exact).
  // The expansion is purely periodic from k = 1, so the period closes
  // exactly when the first interior state repeats.
  Natural p = e.a0;
  Natural q = n - e.a0 * e.a0;
  const Natural p1 = p, q1 = q;
  for (;;) {
    Natural a = (e.a0 + p) / q;
    e.period.push_back(a);
    p = a * q - p;
    q = (n - p * p) / q;
    if (p == p1 && q == q1) break;
  }
  return e;
}

std::vector<Convergent> convergents(const SurdExpansion& e, std::size_t count) {
  std::vector<Convergent> out;
  out.reserve(count);
  // p_{-1} = 1, p_{-2} = 0; q_{-1} = 0, q_{-2} = 1.
  Natural p_prev = 1, p_prev2 = 0;
  Natural q_prev = 0, q_prev2 = 1;
  for (std::size_t k = 0; k < count; ++k) {
    const Natural& a =
        k == 0 ? e.a0 : e.period[(k - 1) % e.period.size()];
    Natural p = a * p_prev + p_prev2;
    Natural q = a * q_prev + q_prev2;
    out.push_back({p, q});
    p_prev2 = p_prev;
    p_prev = p;
    q_prev2 = q_prev;
    q_prev = q;
  }
  return out;
}

mpz_class pell_form_value(const SurdExpansion& e, const Convergent& c) {
  return c.p * c.p - e.n * c.q * c.q;
}

}  // namespace fperfect
