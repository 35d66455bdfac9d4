#pragma once

#include "fperfect/contfrac.hpp"
#include "fperfect/natural.hpp"

namespace fperfect {

/// A solution of x^2 - n y^2 = c with c in {-1, -4} and y >= 1.
struct PellSolution {
  Natural n;
  int c = -1;
  Natural x;
  Natural y;

  bool verifies() const { return x * x - n * y * y == c; }
};

/// x^2 - n y^2 = -1 is solvable iff the period of sqrt(n) is odd.
bool neg_pell_solvable(const Natural& n);

/// Fundamental (minimal-y) solution of x^2 - n y^2 = -1, read off the
/// convergent at the end of the first period. Throws std::domain_error
/// when unsolvable.
PellSolution neg_pell_fundamental(const Natural& n);

/// For odd non-square d >= 3: x^2 - d y^2 = -4 is solvable iff
/// x^2 - d y^2 = -1 is. Even or square d -> std::domain_error.
bool neg4_solvable(const Natural& d);

/// Map a c=-4 solution with odd x to a c=-1 solution:
///   u = x (x^2 + 3) / 2,   v = (x^2 + 1) y / 2.
/// Requires d odd and s.x odd (parity makes both halves exact);
/// violations -> std::domain_error.
PellSolution neg4_to_neg1(const Natural& d, const PellSolution& s);

/// For odd k >= 5, sqrt(k^2 - 4) expands as
///   [k-1; 1, (k-3)/2, 2, (k-3)/2, 1, 2k-2]
/// with period 6. Returns whether the computed expansion matches.
/// Even k or k < 5 -> std::domain_error.
bool near_square_pattern_holds(const Natural& k);

}  // namespace fperfect
