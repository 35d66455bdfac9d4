#include "fperfect/markov.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "fperfect/contfrac.hpp"
#include "fperfect/fibonacci.hpp"
#include "fperfect/pell.hpp"

namespace fperfect::markov {

namespace {

using u128 = unsigned __int128;

// Caps keeping (k^2 - 4) x^2 inside 128 bits with room to spare.
constexpr std::uint64_t kMaxK = 1'000'000'000;
constexpr std::uint64_t kMaxBound = 1'000'000'000;

std::uint64_t u128_isqrt(u128 n) {
  if (n == 0) return 0;
  // Double-precision seed, then fix up; exact for n < 2^126.
  u128 r = static_cast<u128>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return static_cast<std::uint64_t>(r);
}

}  // namespace

bool satisfies(unsigned long k, const Natural& x, const Natural& y) {
  return 1 + x * x + y * y == k * x * y;
}

Pair checked_pair(unsigned long k, Natural x, Natural y) {
  if (x < 1 || x > y) {
    throw std::domain_error("markov pair requires 1 <= x <= y");
  }
  if (!satisfies(k, x, y)) {
    throw std::domain_error("markov pair fails 1 + x^2 + y^2 = k x y");
  }
  return Pair{k, std::move(x), std::move(y)};
}

std::vector<Pair> fibonacci_pairs(std::size_t count) {
  std::vector<Pair> out;
  out.reserve(count);
  // Walk (F(2j-1), F(2j), F(2j+1)) forward two indices at a time.
  Natural lo = 1, mid = 1;        // F(1), F(2)
  for (std::size_t j = 1; j <= count; ++j) {
    Natural hi = lo + mid;        // F(2j+1)
    out.push_back(checked_pair(3, lo, hi));
    lo = hi;
    mid = mid + hi;               // F(2j+2)
  }
  return out;
}

Pair vieta_next(const Pair& p) {
  checked_pair(p.k, p.x, p.y);  // reject invalid input
  return checked_pair(p.k, p.y, p.k * p.y - p.x);
}

std::vector<Pair> brute_solutions(unsigned long k, std::uint64_t bound,
                                  const ScanOptions& scan) {
  if (k < 1) throw std::domain_error("brute_solutions: k must be positive");
  if (k > kMaxK || bound > kMaxBound) {
    throw std::domain_error("brute_solutions: k or bound above supported range");
  }
  if (bound < 1) return {};
  if (k < 3) return {};  // k x y <= 2 x y < 1 + x^2 + y^2

  const u128 kk = static_cast<u128>(k) * k - 4;
  auto chunk_fn = [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<Pair> found;
    for (std::uint64_t x = lo; x < hi; ++x) {
      // y^2 - kxy + (x^2 + 1) = 0: discriminant (k^2-4) x^2 - 4.
      u128 xx = static_cast<u128>(x) * x;
      u128 disc = kk * xx;
      if (disc < 4) continue;
      disc -= 4;
      std::uint64_t z = u128_isqrt(disc);
      if (static_cast<u128>(z) * z != disc) continue;
      u128 kx = static_cast<u128>(k) * x;
      if (((kx ^ z) & 1) != 0) continue;  // roots not integral
      u128 lo_root = (kx - z) / 2;
      u128 hi_root = (kx + z) / 2;
      auto emit = [&](u128 y) {
        if (y >= x && y <= bound) {
          found.push_back(checked_pair(k, Natural(static_cast<unsigned long>(x)),
                                       Natural(static_cast<unsigned long>(y))));
        }
      };
      emit(lo_root);
      if (hi_root != lo_root) emit(hi_root);
    }
    return found;
  };
  return scan_collect<Pair>(1, bound + 1, 1 << 14, scan, chunk_fn);
}

const char* to_string(Certificate c) {
  switch (c) {
    case Certificate::none: return "none";
    case Certificate::am_gm: return "am-gm";
    case Certificate::parity: return "parity-mod-4";
    case Certificate::period_six: return "period-6";
  }
  return "none";
}

EmptinessReport verify_no_solutions(unsigned long k, std::uint64_t bound,
                                    const ScanOptions& scan) {
  if (k == 3) {
    throw std::domain_error("verify_no_solutions: k = 3 has solutions");
  }
  if (k < 1) throw std::domain_error("verify_no_solutions: k must be positive");

  EmptinessReport report;
  report.k = k;
  report.bound = bound;
  report.brute_empty = brute_solutions(k, bound, scan).empty();

  if (k <= 2) {
    // k x y <= 2 x y < 1 + x^2 + y^2 for all positive x, y.
    report.certificate = Certificate::am_gm;
    report.certified = report.brute_empty;
    return report;
  }
  if (k % 2 == 0) {
    // Enumerate residue classes mod 4; squares are 0 or 1 mod 4, so
    // 1 + x^2 + y^2 is never 0 mod 4 while k x y is 0 or 2 with the
    // wrong parity pairing. The loop is the certificate.
    bool satisfiable = false;
    for (unsigned rx = 0; rx < 4 && !satisfiable; ++rx) {
      for (unsigned ry = 0; ry < 4; ++ry) {
        if ((1 + rx * rx + ry * ry) % 4 == (k % 4) * rx * ry % 4) {
          satisfiable = true;
          break;
        }
      }
    }
    report.certificate = Certificate::parity;
    report.certified = report.brute_empty && !satisfiable;
    return report;
  }
  // Odd k >= 5: a solution forces the discriminant (k^2-4) x^2 - 4 to be
  // a square z^2, i.e. z^2 - (k^2-4) x^2 = -4 with k^2-4 odd, which is
  // solvable only when x^2 - (k^2-4) y^2 = -1 is, i.e. only for an odd
  // period of sqrt(k^2-4). The period is 6, so there is no solution.
  Natural key = Natural(k);
  SurdExpansion e = sqrt_expansion(key * key - 4);
  report.period_length = e.period_length();
  report.pattern_holds = near_square_pattern_holds(key);
  report.certificate = Certificate::period_six;
  report.certified = report.brute_empty && report.period_length % 2 == 0;
  return report;
}

}  // namespace fperfect::markov
