#include "fperfect/natural.hpp"

#include <cctype>
#include <stdexcept>

namespace fperfect {

Natural parse_natural(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("not a decimal natural number: " + text);
  }
  return Natural(text, 10);
}

Natural isqrt(const Natural& n) {
  if (n < 0) throw std::domain_error("isqrt of a negative number");
  if (n == 0) return Natural(0);
  // Start above sqrt(n): 2^ceil(bits/2) and descend; the iteration is
  // monotone once the guess is an upper bound.
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  Natural x = Natural(1) << static_cast<unsigned long>((bits + 1) / 2);
  for (;;) {
    Natural y = (x + n / x) >> 1;
    if (y >= x) break;
    x = y;
  }
  if (!(x * x <= n && (x + 1) * (x + 1) > n))
    throw std::logic_error("isqrt post-check failed");
  return x;
}

bool is_perfect_square(const Natural& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Natural pow_ui(const Natural& base, unsigned long exp) {
  Natural r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

std::size_t decimal_digits(const Natural& n) {
  if (n < 0) throw std::domain_error("decimal_digits of a negative number");
  return n.get_str().size();
}

}  // namespace fperfect
