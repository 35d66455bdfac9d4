#pragma once

#include <vector>

#include "fperfect/natural.hpp"

namespace fperfect {

/// Continued fraction of sqrt(N) for non-square N >= 2:
/// [a0; period...] where the period repeats forever.
struct SurdExpansion {
  Natural n;
  Natural a0;
  std::vector<Natural> period;

  std::size_t period_length() const { return period.size(); }
  bool period_odd() const { return period.size() % 2 == 1; }
};

/// Expand sqrt(n). Throws std::domain_error when n is a perfect square
/// or n < 2.
SurdExpansion sqrt_expansion(const Natural& n);

struct Convergent {
  Natural p;
  Natural q;
};

/// First `count` convergents p_k/q_k of the (eventually periodic)
/// expansion, cycling through the period as needed.
std::vector<Convergent> convergents(const SurdExpansion& e, std::size_t count);

/// p^2 - n q^2 for a convergent; stays small (|.| < 2 sqrt(n) + 1).
mpz_class pell_form_value(const SurdExpansion& e, const Convergent& c);

}  // namespace fperfect
