#include "fperfect/fibonacci.hpp"

#include <stdexcept>

namespace fperfect {

namespace {

// Fast doubling: from (F(k), F(k+1)) get
//   F(2k)   = F(k) * (2 F(k+1) - F(k))
//   F(2k+1) = F(k)^2 + F(k+1)^2
std::pair<Natural, Natural> fib_doubling(unsigned long i) {
  if (i == 0) return {Natural(0), Natural(1)};
  auto [a, b] = fib_doubling(i >> 1);
  Natural c = a * (2 * b - a);   // F(2k)
  Natural d = a * a + b * b;     // F(2k+1)
  if (i & 1) return {d, c + d};
  return {c, d};
}

}  // namespace

Natural fib(unsigned long i) { return fib_doubling(i).first; }

std::pair<Natural, Natural> fib_pair(unsigned long i) { return fib_doubling(i); }

Natural lucas(unsigned long i) {
  if (i == 0) return Natural(2);
  // L(i) = 2 F(i+1) - F(i)
  auto [f, f1] = fib_doubling(i);
  return 2 * f1 - f;
}

std::optional<unsigned long> fibonacci_index(const Natural& x) {
  if (x < 1) throw std::domain_error("fibonacci_index: x must be >= 1");
  Natural five_sq = 5 * x * x;
  if (!is_perfect_square(five_sq + 4) && !is_perfect_square(five_sq - 4)) {
    return std::nullopt;
  }
  // Walk up; x = 1 maps to index 1 (not 2).
  Natural a = 0, b = 1;
  unsigned long i = 1;
  while (b < x) {
    Natural next = a + b;
    a = b;
    b = next;
    ++i;
  }
  if (b != x) return std::nullopt;  // square test false positive cannot happen, but be safe
  return i;
}

}  // namespace fperfect
