#pragma once

#include <optional>
#include <utility>

#include "fperfect/natural.hpp"

namespace fperfect {

/// F(0) = 0, F(1) = F(2) = 1, by fast doubling.
Natural fib(unsigned long i);

/// (F(i), F(i+1)) in one doubling pass.
std::pair<Natural, Natural> fib_pair(unsigned long i);

/// L(0) = 2, L(1) = 1, L(n+1) = L(n) + L(n-1).
Natural lucas(unsigned long i);

/// Smallest index i with F(i) = x, or nullopt when x is not a Fibonacci
/// number. Membership is decided by 5x^2+4 or 5x^2-4 being a perfect
/// square. Requires x >= 1; x = 1 yields index 1.
std::optional<unsigned long> fibonacci_index(const Natural& x);

}  // namespace fperfect
