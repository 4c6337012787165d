#pragma once

#include <map>
#include <string>
#include <utility>

#include "moebius/rational.hpp"

namespace moebius {

// Laurent polynomial in the formal symbol N with rational coefficients.
// Zero coefficients are never stored.
class NPolynomial {
 public:
  NPolynomial() = default;
  NPolynomial(const BigRational& constant) { add_term(0, constant); }
  NPolynomial(long constant) { add_term(0, BigRational(constant)); }
  static NPolynomial monomial(int exponent, const BigRational& coeff = 1);

  const std::map<int, BigRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigRational coeff(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  void add_term(int exponent, const BigRational& coeff);

  NPolynomial& operator+=(const NPolynomial& o);
  NPolynomial& operator-=(const NPolynomial& o);
  NPolynomial& operator*=(const NPolynomial& o);
  NPolynomial& operator*=(const BigRational& c);
  friend NPolynomial operator+(NPolynomial a, const NPolynomial& b) { return a += b; }
  friend NPolynomial operator-(NPolynomial a, const NPolynomial& b) { return a -= b; }
  friend NPolynomial operator*(NPolynomial a, const NPolynomial& b) { return a *= b; }
  friend NPolynomial operator*(NPolynomial a, const BigRational& c) { return a *= c; }
  friend NPolynomial operator*(const BigRational& c, NPolynomial a) { return a *= c; }
  NPolynomial operator-() const;
  bool operator==(const NPolynomial& o) const { return terms_ == o.terms_; }

  BigRational evaluate(const BigRational& n) const;
  // p(N) -> p(c N)
  NPolynomial scale_argument(const BigRational& c) const;
  // Multiplies by N^k.
  NPolynomial shift(int k) const;

 private:
  std::map<int, BigRational> terms_;
};

std::string to_string(const NPolynomial& p);

// Laurent polynomial in s = alpha^(1/2) and N. Keys are (s-exponent,
// N-exponent).
class AlphaNPolynomial {
 public:
  using Key = std::pair<int, int>;

  AlphaNPolynomial() = default;
  AlphaNPolynomial(const BigRational& constant) { add_term(0, 0, constant); }
  AlphaNPolynomial(long constant) { add_term(0, 0, BigRational(constant)); }
  static AlphaNPolynomial monomial(int s_exponent, int n_exponent,
                                   const BigRational& coeff = 1);

  const std::map<Key, BigRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigRational coeff(int s_exponent, int n_exponent) const;
  void add_term(int s_exponent, int n_exponent, const BigRational& coeff);

  AlphaNPolynomial& operator+=(const AlphaNPolynomial& o);
  AlphaNPolynomial& operator-=(const AlphaNPolynomial& o);
  AlphaNPolynomial& operator*=(const AlphaNPolynomial& o);
  AlphaNPolynomial& operator*=(const BigRational& c);
  friend AlphaNPolynomial operator+(AlphaNPolynomial a, const AlphaNPolynomial& b) { return a += b; }
  friend AlphaNPolynomial operator-(AlphaNPolynomial a, const AlphaNPolynomial& b) { return a -= b; }
  friend AlphaNPolynomial operator*(AlphaNPolynomial a, const AlphaNPolynomial& b) { return a *= b; }
  friend AlphaNPolynomial operator*(AlphaNPolynomial a, const BigRational& c) { return a *= c; }
  friend AlphaNPolynomial operator*(const BigRational& c, AlphaNPolynomial a) { return a *= c; }
  AlphaNPolynomial operator-() const;
  bool operator==(const AlphaNPolynomial& o) const { return terms_ == o.terms_; }

  // Substitutes a rational alpha. Every s-exponent must be even, otherwise
  // ConsistencyError.
  NPolynomial at_alpha(const BigRational& alpha) const;
  // alpha -> 1/alpha, N -> -alpha N.
  AlphaNPolynomial dual() const;

 private:
  std::map<Key, BigRational> terms_;
};

std::string to_string(const AlphaNPolynomial& p);

}  // namespace moebius
