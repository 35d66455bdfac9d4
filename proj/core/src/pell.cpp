#include "fperfect/pell.hpp"

#include <stdexcept>

namespace fperfect {

bool neg_pell_solvable(const Natural& n) {
  return sqrt_expansion(n).period_odd();
}

PellSolution neg_pell_fundamental(const Natural& n) {
  SurdExpansion e = sqrt_expansion(n);
  if (!e.period_odd()) {
    throw std::domain_error("neg_pell_fundamental: x^2 - " + to_decimal(n) +
                            " y^2 = -1 has no solution (even period)");
  }
  // Convergents p_0/q_0 .. p_{l-1}/q_{l-1}; the last satisfies
  // p^2 - n q^2 = (-1)^l = -1 and is minimal.
  std::size_t l = e.period_length();
  Convergent c = convergents(e, l).back();
  PellSolution s{n, -1, c.p, c.q};
  if (!s.verifies()) throw std::logic_error("neg_pell_fundamental: bad convergent");
  return s;
}

bool neg4_solvable(const Natural& d) {
  if (d < 3 || mpz_even_p(d.get_mpz_t())) {
    throw std::domain_error("neg4_solvable: d must be odd and >= 3");
  }
  if (is_perfect_square(d)) {
    throw std::domain_error("neg4_solvable: d must not be a perfect square");
  }
  return neg_pell_solvable(d);
}

PellSolution neg4_to_neg1(const Natural& d, const PellSolution& s) {
  if (mpz_even_p(d.get_mpz_t())) {
    throw std::domain_error("neg4_to_neg1: d must be odd");
  }
  if (s.x * s.x - d * s.y * s.y != -4) {
    throw std::domain_error("neg4_to_neg1: input does not solve x^2 - d y^2 = -4");
  }
  if (mpz_even_p(s.x.get_mpz_t())) {
    throw std::domain_error("neg4_to_neg1: x must be odd when d is odd");
  }
  Natural u = s.x * (s.x * s.x + 3) / 2;
  Natural v = (s.x * s.x + 1) * s.y / 2;
  PellSolution out{d, -1, u, v};
  if (!out.verifies()) throw std::logic_error("neg4_to_neg1: transform failed");
  return out;
}

bool near_square_pattern_holds(const Natural& k) {
  if (k < 5 || mpz_even_p(k.get_mpz_t())) {
    throw std::domain_error("near_square_pattern_holds: k must be odd and >= 5");
  }
  SurdExpansion e = sqrt_expansion(k * k - 4);
  if (e.a0 != k - 1 || e.period_length() != 6) return false;
  Natural half = (k - 3) / 2;
  return e.period[0] == 1 && e.period[1] == half && e.period[2] == 2 &&
         e.period[3] == half && e.period[4] == 1 && e.period[5] == 2 * k - 2;
}

}  // namespace fperfect
