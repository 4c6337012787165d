#include "moebius/rational.hpp"

#include <cstdlib>

#include "moebius/errors.hpp"

namespace moebius {

std::string to_string(const BigRational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

BigRational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw UsageError("empty rational literal");
  BigRational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw UsageError("malformed rational literal '" + s + "'");
  q.canonicalize();
  return q;
}

BigRational pow(const BigRational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw ConsistencyError("zero raised to a negative power");
    BigRational inv = 1 / base;
    return pow(inv, -exponent);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

BigInt pow(const BigInt& base, unsigned exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt double_factorial_odd(unsigned m) {
  BigInt r = 1;
  for (unsigned k = 1; k < 2 * m; k += 2) r *= k;
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace moebius
