#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "moebius/errors.hpp"
#include "moebius/npoly.hpp"
#include "moebius/rational.hpp"

namespace moebius {

// Multiset of coupling indices, kept sorted: {3,3,4} is t_3^2 t_4.
using Monomial = std::vector<int>;

inline int weighted_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0);
}

inline Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

// Truncated power series in t_1, t_2, ... with deg t_j = j. Terms of weighted
// degree above the truncation are dropped by every operation.
template <class Coeff>
class Series {
 public:
  explicit Series(int max_degree = 0) : max_degree_(max_degree) {}

  static Series one(int max_degree) {
    Series s(max_degree);
    s.add_term({}, Coeff(1));
    return s;
  }

  int max_degree() const { return max_degree_; }
  const std::map<Monomial, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coeff coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff() : it->second;
  }

  void add_term(Monomial m, const Coeff& c) {
    if (c.is_zero() || weighted_degree(m) > max_degree_) return;
    std::sort(m.begin(), m.end());
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Series& operator+=(const Series& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Series& operator-=(const Series& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Series& operator*=(const BigRational& q) {
    if (q == 0) terms_.clear();
    for (auto& [m, c] : terms_) c *= q;
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const BigRational& q) { return a *= q; }

  friend Series operator*(const Series& a, const Series& b) {
    a.check_compatible(b);
    Series r(a.max_degree_);
    for (const auto& [ma, ca] : a.terms_) {
      int da = weighted_degree(ma);
      for (const auto& [mb, cb] : b.terms_) {
        if (da + weighted_degree(mb) > r.max_degree_) continue;
        r.add_term(monomial_product(ma, mb), ca * cb);
      }
    }
    return r;
  }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  bool operator==(const Series& o) const {
    return max_degree_ == o.max_degree_ && terms_ == o.terms_;
  }

  Series truncated(int max_degree) const {
    Series r(max_degree);
    for (const auto& [m, c] : terms_) r.add_term(m, c);
    return r;
  }

  template <class F>
  Series map_coefficients(F f) const {
    Series r(max_degree_);
    for (const auto& [m, c] : terms_) r.add_term(m, f(m, c));
    return r;
  }

  template <class Pred>
  Series filter(Pred keep) const {
    Series r(max_degree_);
    for (const auto& [m, c] : terms_)
      if (keep(m)) r.add_term(m, c);
    return r;
  }

  void check_compatible(const Series& o) const {
    if (max_degree_ != o.max_degree_)
      throw UsageError("series truncated at different degrees (" +
                       std::to_string(max_degree_) + " vs " +
                       std::to_string(o.max_degree_) + ")");
  }

 private:
  int max_degree_;
  std::map<Monomial, Coeff> terms_;
};

template <class Coeff>
Coeff constant_term(const Series<Coeff>& s) {
  return s.coeff({});
}

// exp(s) for s without constant term.
template <class Coeff>
Series<Coeff> exp(const Series<Coeff>& s) {
  if (!constant_term(s).is_zero())
    throw PreconditionError("exp of a series with nonzero constant term");
  Series<Coeff> result = Series<Coeff>::one(s.max_degree());
  Series<Coeff> power = result;
  for (int k = 1; k <= s.max_degree(); ++k) {
    power = power * s;
    if (power.is_zero()) break;
    result += power * BigRational(BigInt(1), factorial(k));
  }
  return result;
}

// log(s) for s with constant term 1.
template <class Coeff>
Series<Coeff> log(const Series<Coeff>& s) {
  Coeff c0 = constant_term(s);
  if (!(c0 == Coeff(1)))
    throw PreconditionError("log of a series whose constant term is not 1");
  Series<Coeff> x = s - Series<Coeff>::one(s.max_degree());
  Series<Coeff> result(s.max_degree());
  Series<Coeff> power = Series<Coeff>::one(s.max_degree());
  for (int k = 1; k <= s.max_degree(); ++k) {
    power = power * x;
    if (power.is_zero()) break;
    result += power * BigRational(k % 2 == 1 ? 1 : -1, k);
  }
  return result;
}

using CouplingSeries = Series<NPolynomial>;
using AlphaSeries = Series<AlphaNPolynomial>;

std::string monomial_to_string(const Monomial& m, const char* symbol = "t");

}  // namespace moebius
