#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>

namespace fperfect {

/// Arbitrary-precision non-negative integer, the universal operand of the
/// library. Backed by GMP; entry points that require non-negativity check it.
using Natural = mpz_class;

/// Parses a plain decimal string (digits only, no sign, no whitespace).
Natural parse_natural(const std::string& text);

/// Floor of sqrt(n) by integer Newton iteration. The result r is
/// post-checked against r^2 <= n < (r+1)^2 before returning.
Natural isqrt(const Natural& n);

bool is_perfect_square(const Natural& n);

/// base^exp in exact integer arithmetic.
Natural pow_ui(const Natural& base, unsigned long exp);

/// Exact count of decimal digits (0 counts as one digit).
std::size_t decimal_digits(const Natural& n);

inline std::string to_decimal(const Natural& n) { return n.get_str(); }

}  // namespace fperfect
