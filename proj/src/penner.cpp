#include "moebius/penner.hpp"

#include <mutex>
#include <vector>

#include "moebius/config.hpp"
#include "moebius/errors.hpp"

namespace moebius {

NPolynomial ZSeries::coeff(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? NPolynomial() : it->second;
}

void ZSeries::add_term(int k, const NPolynomial& c) {
  if (k > order_ || c.is_zero()) return;
  if (k < 0) throw ConsistencyError("negative power of z");
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ZSeries& ZSeries::operator+=(const ZSeries& o) {
  if (o.order_ != order_) throw UsageError("z-series truncated at different orders");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

ZSeries& ZSeries::operator-=(const ZSeries& o) {
  if (o.order_ != order_) throw UsageError("z-series truncated at different orders");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

ZSeries& ZSeries::operator*=(const BigRational& c) {
  if (c == 0) terms_.clear();
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

ZSeries ZSeries::scale_z(const BigRational& c) const {
  ZSeries r(order_);
  for (const auto& [k, v] : terms_) r.add_term(k, v * pow(c, k));
  return r;
}

ZSeries ZSeries::scale_n(const BigRational& c) const {
  ZSeries r(order_);
  for (const auto& [k, v] : terms_) r.add_term(k, v.scale_argument(c));
  return r;
}

ZSeries ZSeries::divide_z_by_n() const {
  ZSeries r(order_);
  for (const auto& [k, v] : terms_) r.add_term(k, v.shift(-k));
  return r;
}

BigRational bernoulli(int n) {
  static std::mutex mutex;
  static std::vector<BigRational> table{BigRational(1)};
  if (n < 0) throw PreconditionError("Bernoulli index must be non-negative");
  std::lock_guard lock(mutex);
  while (static_cast<int>(table.size()) <= n) {
    const int m = static_cast<int>(table.size());
    BigRational s = 0;
    for (int k = 0; k < m; ++k) s += BigRational(binomial(m + 1, k)) * table[k];
    table.push_back(-s / (m + 1));
  }
  return table[n];
}

namespace {

BigRational fact(int n) { return BigRational(factorial(static_cast<unsigned>(n))); }
int sign_pow(int m) { return m % 2 == 0 ? 1 : -1; }

void check_order(int order) {
  if (order < 1) throw PreconditionError("z-order must be at least 1");
}

// Graphs with valences >= 3 and e - v = k have at most 6k half-edges.
void check_excess_budget(int excess) {
  if (6 * excess > budgets().half_edges)
    throw ResourceError("e - v = " + std::to_string(excess) + " needs profiles with up to " +
                        std::to_string(6 * excess) + " half-edges, over the budget of " +
                        std::to_string(budgets().half_edges));
}

}  // namespace

ZSeries K_series(int order, int alpha) {
  check_order(order);
  if (alpha < 1) throw PreconditionError("alpha must be a positive integer");
  const BigRational a(alpha);
  ZSeries k(order);
  for (int m = 1; 2 * m - 1 <= order; ++m)
    k.add_term(2 * m - 1, NPolynomial::monomial(1, bernoulli(2 * m) / (2 * m * (2 * m - 1))));
  for (int m = 1; m <= order; ++m) {
    k.add_term(m, NPolynomial::monomial(m, BigRational(sign_pow(m), 4 * m) * pow(a, m)));
    for (int q = 0; q <= m / 2; ++q) {
      BigRational c = BigRational(sign_pow(m)) * fact(m - 1) * bernoulli(2 * q) /
                      (fact(2 * q) * fact(m + 1 - 2 * q));
      c *= pow(a, m) * (pow(a, 1 - 2 * q) - 1) / 2;
      k.add_term(m, NPolynomial::monomial(m + 1 - 2 * q, c));
      for (int s = 0; s <= (m + 1) / 2 - q; ++s) {
        BigRational d = BigRational(sign_pow(m)) * fact(m - 1) * bernoulli(2 * q) *
                        bernoulli(2 * s) /
                        (fact(2 * q) * fact(2 * s) * fact(m + 2 - 2 * q - 2 * s));
        d *= pow(a, m + 1 - 2 * q);
        k.add_term(m, NPolynomial::monomial(m + 2 - 2 * q - 2 * s, -d));
      }
    }
  }
  return k;
}

ZSeries J_series(int order, int gamma) {
  check_order(order);
  if (gamma < 1) throw PreconditionError("gamma must be a positive integer");
  const BigRational g(gamma);
  const BigRational inv = 1 / g;
  ZSeries j(order);
  for (int m = 1; 2 * m - 1 <= order; ++m)
    j.add_term(2 * m - 1, NPolynomial::monomial(1, bernoulli(2 * m) / (2 * m * (2 * m - 1)) *
                                                       inv * pow(inv, 2 * m - 1)));
  for (int m = 1; m <= order; ++m) {
    const BigRational zf = pow(inv, m);
    j.add_term(m, NPolynomial::monomial(m, BigRational(sign_pow(m), 4 * m) * zf));
    for (int q = 0; q <= m / 2; ++q) {
      BigRational c = BigRational(sign_pow(m)) * fact(m - 1) * bernoulli(2 * q) /
                      (fact(2 * q) * fact(m + 1 - 2 * q));
      c *= (1 - pow(g, 2 * q - 1)) * zf / 2;
      j.add_term(m, NPolynomial::monomial(m + 1 - 2 * q, -c));
      for (int s = 0; s <= (m + 1) / 2 - q; ++s) {
        BigRational d = BigRational(sign_pow(m)) * fact(m - 1) * bernoulli(2 * q) *
                        bernoulli(2 * s) /
                        (fact(2 * q) * fact(2 * s) * fact(m + 2 - 2 * q - 2 * s));
        d *= pow(g, 2 * s - 1) * zf;
        j.add_term(m, NPolynomial::monomial(m + 2 - 2 * q - 2 * s, -d));
      }
    }
  }
  return j;
}

ZSeries K1_series(int order) {
  check_order(order);
  ZSeries k(order);
  for (int g = 0; 2 * g - 1 <= order; ++g)
    for (int n = 1; 2 * g + n - 2 <= order; ++n) {
      if (2 - 2 * g - n >= 0) continue;
      const int p = 2 * g + n - 2;
      BigRational c = fact(2 * g + n - 3) * (2 * g - 1) * bernoulli(2 * g) / (fact(2 * g) * fact(n));
      k.add_term(p, NPolynomial::monomial(n, c * sign_pow(p)));
    }
  return k;
}

ZSeries nonorientable_remainder(int order) {
  check_order(order);
  ZSeries r(order);
  for (int q = 0; 2 * q <= order; ++q)
    for (int n = 1; 2 * q + n - 1 <= order; ++n) {
      if (1 - 2 * q - n >= 0) continue;
      const int p = 2 * q + n - 1;
      BigRational c = fact(2 * q + n - 2) * (pow(BigRational(2), 2 * q - 1) - 1) *
                      bernoulli(2 * q) / (fact(2 * q) * fact(n));
      c *= pow(BigRational(2), n) * sign_pow(p);
      r.add_term(p, NPolynomial::monomial(n, c));
    }
  return r;
}

ZSeries K2_series(int order) {
  return K1_series(order).scale_n(2) * BigRational(1, 2) -
         nonorientable_remainder(order) * BigRational(1, 2);
}

namespace {

// r must be a positive integer or the reciprocal of one.
std::pair<bool, int> classify(const BigRational& r) {
  if (r > 0 && r.get_den() == 1 && r.get_num().fits_sint_p())
    return {true, static_cast<int>(r.get_num().get_si())};
  if (r > 0 && r.get_num() == 1 && r.get_den().fits_sint_p())
    return {false, static_cast<int>(r.get_den().get_si())};
  throw PreconditionError("r must be a positive integer or its reciprocal, got " + to_string(r));
}

}  // namespace

ZSeries I_series(int order, const BigRational& r) {
  auto [integer, k] = classify(r);
  if (integer) return K_series(order, k).scale_z(BigRational(1, k)).divide_z_by_n();
  return J_series(order, k).scale_z(BigRational(k)).divide_z_by_n();
}

ZSeries I_dual_series(int order, const BigRational& r) {
  return I_series(order, 1 / r).scale_n(-r);
}

ZSeries penner_substitute(const CouplingSeries& s, int order, const BigRational& z_scale) {
  ZSeries out(order);
  for (const auto& [m, c] : s.terms()) {
    int degree = 0;
    for (int j : m) {
      if (j < 3)
        throw PreconditionError("Penner substitution needs t_1 = t_2 = 0, found " +
                                monomial_to_string(m));
      degree += j;
    }
    if (degree % 2 != 0)
      throw ConsistencyError("odd weighted degree in " + monomial_to_string(m) +
                             " gives a half-integer power of z");
    const int v = static_cast<int>(m.size());
    const int power = degree / 2 - v;
    if (power > order) continue;
    out.add_term(power, c * (BigRational(sign_pow(v)) * pow(z_scale, power)));
  }
  return out;
}

ZSeries penner_graph_series(NormalizationTag tag, int beta, int order,
                            const BigRational& z_scale) {
  check_order(order);
  check_excess_budget(order);
  ExpansionOptions opts;
  opts.max_degree = 6 * order;
  opts.include_t1 = false;
  opts.include_t2 = false;
  opts.max_excess = order;
  return penner_substitute(expand_logZ(beta, tag, opts), order, z_scale);
}

BigRational real_moduli_euler(int q, int n) {
  if (q < 0 || n <= 0 || 1 - 2 * q - n >= 0)
    throw PreconditionError("need q >= 0, n > 0 and 1 - 2q - n < 0");
  return fact(2 * q + n - 2) * (pow(BigRational(2), 2 * q - 1) - 1) * bernoulli(2 * q) /
         (2 * fact(2 * q) * fact(n));
}

BigRational real_moduli_graph_sum(int genus, int n) {
  const int chi = 1 - genus;
  const int excess = n - chi;  // e - v
  if (n <= 0 || excess <= 0)
    throw PreconditionError("need n > 0 and a hyperbolic surface");
  check_excess_budget(excess);
  ExpansionOptions opts;
  opts.max_degree = 6 * excess;
  opts.include_t1 = false;
  opts.include_t2 = false;
  opts.max_excess = excess;
  BigRational sum = 0;
  for (const auto& e : connected_catalog(opts)) {
    const auto& t = e.topology;
    if (t.natural != -1 || t.f != n || t.genus != genus) continue;
    sum += BigRational(sign_pow(t.e), e.aut_moebius);
  }
  return sum;
}

}  // namespace moebius
