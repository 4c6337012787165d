#pragma once

#include <map>

#include "moebius/expansion.hpp"
#include "moebius/npoly.hpp"
#include "moebius/rational.hpp"

namespace moebius {

// Truncated series in z with Laurent-in-N coefficients; exponents 0..order.
class ZSeries {
 public:
  explicit ZSeries(int order = 0) : order_(order) {}

  int order() const { return order_; }
  const std::map<int, NPolynomial>& terms() const { return terms_; }
  NPolynomial coeff(int k) const;
  void add_term(int k, const NPolynomial& c);

  ZSeries& operator+=(const ZSeries& o);
  ZSeries& operator-=(const ZSeries& o);
  ZSeries& operator*=(const BigRational& c);
  friend ZSeries operator+(ZSeries a, const ZSeries& b) { return a += b; }
  friend ZSeries operator-(ZSeries a, const ZSeries& b) { return a -= b; }
  friend ZSeries operator*(ZSeries a, const BigRational& c) { return a *= c; }
  bool operator==(const ZSeries& o) const { return order_ == o.order_ && terms_ == o.terms_; }

  // z -> c z
  ZSeries scale_z(const BigRational& c) const;
  // N -> c N
  ZSeries scale_n(const BigRational& c) const;
  // z -> z / N  (coefficient of z^k picks up N^-k)
  ZSeries divide_z_by_n() const;

 private:
  int order_;
  std::map<int, NPolynomial> terms_;
};

// Bernoulli numbers with b_1 = -1/2, from sum_k C(n+1,k) b_k = 0. Cached.
BigRational bernoulli(int n);

// Closed forms of the Penner-type integrals with Delta^(2 alpha), and with
// |Delta|^(2/gamma), truncated at z^order. z-independent terms are dropped.
ZSeries K_series(int order, int alpha);
ZSeries J_series(int order, int gamma);
// alpha = 1 in genus form: sum (2g+n-3)!(2g-1)/((2g)!n!) b_2g N^n (-z)^(2g+n-2).
ZSeries K1_series(int order);
// sum over q >= 0, n > 0, 2q+n > 1 of
// (2q+n-2)!(2^(2q-1)-1)/((2q)!n!) b_2q (2N)^n (-z)^(2q+n-1).
ZSeries nonorientable_remainder(int order);
// K(z,N,2) = 1/2 K(z,2N,1) - 1/2 nonorientable_remainder.
ZSeries K2_series(int order);

// r = alpha (integer) or 1/gamma. I(z,N,alpha) = K(z/(alpha N), N, alpha),
// I(z,N,1/gamma) = J(gamma z/N, N, gamma).
ZSeries I_series(int order, const BigRational& r);
// I(z, -r N, 1/r) computed from the other branch.
ZSeries I_dual_series(int order, const BigRational& r);

// t_j -> -(z_scale z)^(j/2 - 1). The series must not contain t_1 or t_2.
ZSeries penner_substitute(const CouplingSeries& s, int order,
                          const BigRational& z_scale = 1);

// Graph-side Penner series: expansion with t_1 = t_2 = 0 at degree 6*order,
// then substituted.
//   K(z,N,2): gse_penner tag, beta 4
//   K(z,N,1): hermitian tag, beta 2
//   J(z,N,2): master tag, beta 1, z_scale 1/2
ZSeries penner_graph_series(NormalizationTag tag, int beta, int order,
                            const BigRational& z_scale = 1);

// 1/2 (2q+n-2)!(2^(2q-1)-1) b_2q / ((2q)! n!), for 1 - 2q - n < 0.
BigRational real_moduli_euler(int q, int n);

// Sum of (-1)^e / |Aut| over connected non-orientable graphs with valences
// >= 3, n faces and genus g (chi = 1 - g).
BigRational real_moduli_graph_sum(int genus, int n);

}  // namespace moebius
