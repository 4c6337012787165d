#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace moebius {

using BigInt = mpz_class;
using BigRational = mpq_class;

// num/den in lowest terms. The two-argument mpq_class constructor does not
// reduce, and GMP arithmetic expects reduced operands.
inline BigRational ratio(long num, long den) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

// Always "p/q", including "n/1" for integers, so strings round-trip exactly.
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

// Accepts "p/q" or a bare integer "p".
BigRational parse_rational(std::string_view text);

BigRational pow(const BigRational& base, int exponent);
BigInt pow(const BigInt& base, unsigned exponent);

BigInt factorial(unsigned n);
// (2m-1)!! with the convention (-1)!! = 1.
BigInt double_factorial_odd(unsigned m);
BigInt binomial(unsigned n, unsigned k);

}  // namespace moebius
