#pragma once

#include <cstddef>
#include <vector>

#include "fperfect/natural.hpp"
#include "fperfect/parallel.hpp"

namespace fperfect::markov {

/// A solution of 1 + x^2 + y^2 = k x y with 1 <= x <= y. Construct
/// through checked_pair so every emitted pair has been re-verified.
struct Pair {
  unsigned long k = 3;
  Natural x;
  Natural y;

  bool operator==(const Pair&) const = default;
};

bool satisfies(unsigned long k, const Natural& x, const Natural& y);

/// Throws std::domain_error unless 1 <= x <= y and the equation holds.
Pair checked_pair(unsigned long k, Natural x, Natural y);

/// First `count` solutions (F(2j-1), F(2j+1)), j = 1..count, of the
/// k = 3 equation. Consecutive odd-indexed Fibonacci numbers.
std::vector<Pair> fibonacci_pairs(std::size_t count);

/// Jump to the next solution up the Vieta tree: fixing x = p.y, the two
/// roots of the quadratic in the other variable sum to k*y, giving
/// (y, k*y - x). Strictly larger than p.
Pair vieta_next(const Pair& p);

/// All pairs 1 <= x <= y <= bound satisfying 1 + x^2 + y^2 = k x y,
/// ascending in x. Scans x and solves the quadratic in y through its
/// discriminant, so the cost is linear in bound.
std::vector<Pair> brute_solutions(unsigned long k, std::uint64_t bound,
                                  const ScanOptions& scan = {});

/// How an emptiness claim is backed.
enum class Certificate {
  none,        // only the finite scan
  am_gm,       // k <= 2: k x y <= 2 x y < 1 + x^2 + y^2
  parity,      // even k: no residue class mod 4 satisfies the equation
  period_six,  // odd k >= 5: sqrt(k^2-4) has period 6, so x^2-(k^2-4)y^2=-4
               // is unsolvable and neither is the original equation
};

struct EmptinessReport {
  unsigned long k = 0;
  std::uint64_t bound = 0;
  bool brute_empty = false;   // scan up to bound found nothing
  bool certified = false;     // emptiness holds for all x, y, not just <= bound
  Certificate certificate = Certificate::none;
  std::size_t period_length = 0;  // set on the period_six route
  bool pattern_holds = false;     // near-square expansion matched (same route)
};

const char* to_string(Certificate c);

/// For k != 3: brute scan to `bound` plus an unconditional certificate.
/// k = 3 -> std::domain_error (it has solutions).
EmptinessReport verify_no_solutions(unsigned long k, std::uint64_t bound,
                                    const ScanOptions& scan = {});

}  // namespace fperfect::markov
