#include "moebius/oracle.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <map>
#include <random>

#include "moebius/config.hpp"
#include "moebius/errors.hpp"
#include "moebius/parallel.hpp"

namespace moebius {

namespace {

using Exps = std::vector<int>;
using Poly = std::map<Exps, BigRational>;

void add_to(Poly& p, const Exps& e, const BigRational& c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

Poly multiply(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exps e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      add_to(r, e, ca * cb);
    }
  return r;
}

Poly constant_poly(int vars) { return Poly{{Exps(vars, 0), BigRational(1)}}; }

Poly vandermonde_power(int n, int beta) {
  Poly p = constant_poly(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Poly diff;
      Exps ei(n, 0), ej(n, 0);
      ei[i] = 1;
      ej[j] = 1;
      diff[ei] = 1;
      diff[ej] = -1;
      for (int b = 0; b < beta; ++b) p = multiply(p, diff);
    }
  return p;
}

Poly power_sum_product(int n, const std::vector<int>& powers) {
  Poly p = constant_poly(n);
  for (int j : powers) {
    Poly ps;
    for (int i = 0; i < n; ++i) {
      Exps e(n, 0);
      e[i] = j;
      add_to(ps, e, 1);
    }
    p = multiply(p, ps);
  }
  return p;
}

// (e-1)!! / (2c)^(e/2) for even e, 0 for odd e.
class GaussianMoments {
 public:
  explicit GaussianMoments(const BigRational& c) : two_c_(2 * c) {}
  const BigRational& operator()(int e) {
    while (static_cast<int>(table_.size()) <= e) {
      const int k = static_cast<int>(table_.size());
      if (k % 2 == 1) table_.push_back(0);
      else if (k == 0) table_.push_back(1);
      else table_.push_back(table_[k - 2] * BigRational(k - 1) / two_c_);
    }
    return table_[e];
  }

 private:
  BigRational two_c_;
  std::vector<BigRational> table_;
};

void check_query(const MomentQuery& q) {
  if (q.beta != 1 && q.beta != 2 && q.beta != 4)
    throw PreconditionError("beta must be 1, 2 or 4");
  if (q.n < 1) throw PreconditionError("matrix size must be positive");
  if (q.c <= 0) throw PreconditionError("Gaussian scale must be positive");
  int degree = 0;
  for (int j : q.powers) {
    if (j < 1) throw PreconditionError("powers must be positive");
    degree += j;
  }
  const int budget = budgets().oracle_degree;
  if (degree > budget || q.n > 4)
    throw ResourceError("moment of degree " + std::to_string(degree) + " at n = " +
                        std::to_string(q.n) + " is over the oracle budget");
}

int total_degree(const std::vector<int>& powers) {
  int d = 0;
  for (int j : powers) d += j;
  return d;
}

BigRational vandermonde_route(const MomentQuery& q) {
  GaussianMoments m(q.c);
  const Poly delta = q.n > 1 ? vandermonde_power(q.n, q.beta) : constant_poly(1);
  const Poly ps = power_sum_product(q.n, q.powers);
  BigRational num = 0, den = 0;
  for (const auto& [ea, ca] : delta) {
    BigRational w = ca;
    for (int e : ea) w *= m(e);
    den += w;
    for (const auto& [eb, cb] : ps) {
      BigRational v = ca * cb;
      for (int i = 0; i < q.n && v != 0; ++i) v *= m(ea[i] + eb[i]);
      num += v;
    }
  }
  return num / den;
}

// n = 2, beta = 1: k1 = u + w, k2 = u - w separates the density into
// exp(-2c u^2) and |w| exp(-2c w^2).
BigRational real_pair_route(const MomentQuery& q) {
  std::map<std::pair<int, int>, BigRational> poly{{{0, 0}, 1}};
  for (int j : q.powers) {
    // (u+w)^j + (u-w)^j
    std::map<std::pair<int, int>, BigRational> next;
    for (const auto& [e, c] : poly)
      for (int t = 0; t <= j; t += 2) {
        BigRational add = c * 2 * BigRational(binomial(j, t));
        auto key = std::make_pair(e.first + j - t, e.second + t);
        next[key] += add;
      }
    poly = std::move(next);
  }
  GaussianMoments mu(2 * q.c);
  BigRational total = 0;
  for (const auto& [e, c] : poly) {
    if (e.first % 2 || e.second % 2) continue;
    const int s = e.second / 2;
    total += c * mu(e.first) * BigRational(factorial(s)) / pow(2 * q.c, s);
  }
  return total;
}

}  // namespace

BigRational entry_moment(const MomentQuery& q) {
  check_query(q);
  if (q.beta != 1) throw PreconditionError("entry route is implemented for beta = 1");
  const int n = q.n;
  const int length = total_degree(q.powers);
  if (length % 2 == 1) return 0;
  // Variances: diagonal 1/(2c), off-diagonal 1/(4c).
  GaussianMoments diag(q.c), off(2 * q.c);
  std::vector<int> idx(length, 0);
  std::map<std::pair<int, int>, int> count;
  BigRational total = 0;
  for (;;) {
    count.clear();
    int at = 0;
    for (int j : q.powers) {
      for (int p = 0; p < j; ++p) {
        int a = idx[at + p], b = idx[at + (p + 1) % j];
        ++count[{std::min(a, b), std::max(a, b)}];
      }
      at += j;
    }
    BigRational term = 1;
    for (const auto& [key, mult] : count) {
      term *= key.first == key.second ? diag(mult) : off(mult);
      if (term == 0) break;
    }
    total += term;
    int k = 0;
    while (k < length && ++idx[k] == n) idx[k++] = 0;
    if (k == length) break;
  }
  return total;
}

BigRational eigenvalue_moment(const MomentQuery& q) {
  check_query(q);
  if (total_degree(q.powers) % 2 == 1) return 0;
  if (q.beta == 1) {
    if (q.n == 1) return vandermonde_route(q);
    if (q.n == 2) return real_pair_route(q);
    return entry_moment(q);
  }
  return vandermonde_route(q);
}

TagDictionary tag_dictionary(NormalizationTag tag, int beta, int n, int max_degree) {
  TagDictionary d;
  d.coupling.assign(max_degree + 1, 0);
  for (int j = 1; j <= max_degree; ++j) {
    switch (tag) {
      case NormalizationTag::master:
        d.c = BigRational(1, 4);
        d.coupling[j] = BigRational(1, 2 * j);
        break;
      case NormalizationTag::rescaled:
        d.c = ratio(beta, 4);
        d.coupling[j] = ratio(beta, 2 * j);
        break;
      case NormalizationTag::hermitian:
      case NormalizationTag::gse_penner:
        d.c = BigRational(1, 2);
        d.coupling[j] = BigRational(1, j);
        break;
      case NormalizationTag::invariant:
        d.c = ratio(n * beta, 4);
        d.coupling[j] = ratio(n * beta, 2 * j);
        break;
    }
  }
  if (tag == NormalizationTag::master) d.c = BigRational(1, 4);
  if (tag == NormalizationTag::hermitian && beta != 2)
    throw PreconditionError("hermitian tag requires beta = 2");
  if (tag == NormalizationTag::gse_penner && beta != 4)
    throw PreconditionError("gse-penner tag requires beta = 4");
  d.c.canonicalize();
  return d;
}

namespace {

void monomials_rec(int max_degree, int min_index, const std::vector<int>& allowed,
                   Monomial& cur, int deg, std::vector<Monomial>& out) {
  out.push_back(cur);
  for (int j : allowed) {
    if (j < min_index || deg + j > max_degree) continue;
    cur.push_back(j);
    monomials_rec(max_degree, j, allowed, cur, deg + j, out);
    cur.pop_back();
  }
}

std::vector<Monomial> all_monomials(const ExpansionOptions& opts) {
  std::vector<int> allowed;
  for (int j = 1; j <= opts.max_degree; ++j) {
    if (j == 1 && !opts.include_t1) continue;
    if (j == 2 && !opts.include_t2) continue;
    allowed.push_back(j);
  }
  std::vector<Monomial> out;
  Monomial cur;
  monomials_rec(opts.max_degree, 0, allowed, cur, 0, out);
  return out;
}

}  // namespace

std::vector<std::pair<Monomial, BigRational>> oracle_log_z(int beta, NormalizationTag tag, int n,
                                                           const ExpansionOptions& opts) {
  return oracle_log_z(beta, n, tag_dictionary(tag, beta, n, opts.max_degree), opts);
}

std::vector<std::pair<Monomial, BigRational>> oracle_log_z(int beta, int n,
                                                           const TagDictionary& dict,
                                                           const ExpansionOptions& opts) {
  if (opts.max_degree > budgets().oracle_degree)
    throw ResourceError("degree " + std::to_string(opts.max_degree) +
                        " is over the oracle degree budget of " +
                        std::to_string(budgets().oracle_degree));
  if (static_cast<int>(dict.coupling.size()) <= opts.max_degree)
    throw PreconditionError("coupling table shorter than the requested degree");
  const std::vector<Monomial> monomials = all_monomials(opts);
  std::vector<BigRational> values(monomials.size());
  parallel_for(monomials.size(), [&](std::size_t i) {
    const Monomial& m = monomials[i];
    MomentQuery q{beta, n, m, dict.c};
    BigRational coeff = eigenvalue_moment(q);
    if (coeff == 0) return;
    std::map<int, int> mult;
    for (int j : m) ++mult[j];
    for (auto [j, a] : mult)
      coeff *= pow(dict.coupling[j], a) / BigRational(factorial(a));
    values[i] = coeff;
  });
  CouplingSeries z(opts.max_degree);
  for (std::size_t i = 0; i < monomials.size(); ++i) z.add_term(monomials[i], NPolynomial(values[i]));
  CouplingSeries logz = log(z);
  std::vector<std::pair<Monomial, BigRational>> out;
  for (const auto& m : monomials) {
    if (m.empty()) continue;
    out.emplace_back(m, logz.coeff(m).coeff(0));
  }
  return out;
}

std::vector<OracleReport> oracle_compare(int beta, NormalizationTag tag,
                                         const ExpansionOptions& opts,
                                         const std::vector<int>& sizes,
                                         bool throw_on_mismatch) {
  const CouplingSeries predicted = expand_logZ(beta, tag, opts);
  std::vector<OracleReport> reports;
  for (int n : sizes) {
    for (const auto& [m, exact] : oracle_log_z(beta, tag, n, opts)) {
      OracleReport r;
      r.beta = beta;
      r.n = n;
      r.monomial = m;
      r.exact = exact;
      r.predicted = predicted.coeff(m).evaluate(BigRational(n));
      r.equal = r.exact == r.predicted;
      if (!r.equal && throw_on_mismatch)
        throw VerificationFailure("oracle mismatch at beta=" + std::to_string(beta) +
                                  ", n=" + std::to_string(n) + ", monomial " +
                                  monomial_to_string(m) + ": oracle " + to_string(r.exact) +
                                  ", graph sum " + to_string(r.predicted));
      reports.push_back(std::move(r));
    }
    // Graph-sum monomials the oracle did not list must vanish.
    for (const auto& [m, c] : predicted.terms()) {
      bool listed = false;
      for (const auto& r : reports)
        if (r.n == n && r.monomial == m) listed = true;
      if (listed) continue;
      OracleReport r{beta, n, m, 0, c.evaluate(BigRational(n)), false};
      r.equal = r.predicted == 0;
      if (!r.equal && throw_on_mismatch)
        throw VerificationFailure("graph sum has a term " + monomial_to_string(m) +
                                  " absent from the oracle");
      reports.push_back(std::move(r));
    }
  }
  return reports;
}

namespace {

using Matrix = Eigen::MatrixXcd;

Matrix sample(int beta, int n, double c, std::mt19937_64& rng) {
  std::normal_distribution<double> diag(0.0, std::sqrt(1.0 / (2 * c)));
  std::normal_distribution<double> off(0.0, std::sqrt(1.0 / (4 * c)));
  const std::complex<double> I(0, 1);
  if (beta != 4) {
    Matrix x = Matrix::Zero(n, n);
    for (int a = 0; a < n; ++a) {
      x(a, a) = diag(rng);
      for (int b = a + 1; b < n; ++b) {
        std::complex<double> z = off(rng);
        if (beta == 2) z += I * off(rng);
        x(a, b) = z;
        x(b, a) = std::conj(z);
      }
    }
    return x;
  }
  // q = q0 + q1 i + q2 j + q3 k  ->  [[q0 + i q1, q2 + i q3], [-q2 + i q3, q0 - i q1]]
  Matrix x = Matrix::Zero(2 * n, 2 * n);
  auto put = [&](int a, int b, double q0, double q1, double q2, double q3) {
    x(2 * a, 2 * b) = {q0, q1};
    x(2 * a, 2 * b + 1) = {q2, q3};
    x(2 * a + 1, 2 * b) = {-q2, q3};
    x(2 * a + 1, 2 * b + 1) = {q0, -q1};
  };
  for (int a = 0; a < n; ++a) {
    put(a, a, diag(rng), 0, 0, 0);
    for (int b = a + 1; b < n; ++b) {
      double q0 = off(rng), q1 = off(rng), q2 = off(rng), q3 = off(rng);
      put(a, b, q0, q1, q2, q3);
      put(b, a, q0, -q1, -q2, -q3);
    }
  }
  return x;
}

}  // namespace

McEstimate mc_estimate(int beta, int n, const std::vector<int>& powers,
                       std::int64_t samples, std::uint64_t seed, double c) {
  if (beta != 1 && beta != 2 && beta != 4) throw PreconditionError("beta must be 1, 2 or 4");
  if (n < 1 || samples < 2 || c <= 0)
    throw PreconditionError("need n >= 1, at least two samples and c > 0");
  for (int j : powers)
    if (j < 1) throw PreconditionError("powers must be positive");
  constexpr std::int64_t chunks = 64;
  std::vector<double> sum(chunks, 0), sum_sq(chunks, 0);
  parallel_for(chunks, [&](std::size_t chunk) {
    std::seed_seq seq{static_cast<std::uint64_t>(seed), static_cast<std::uint64_t>(chunk)};
    std::mt19937_64 rng(seq);
    const std::int64_t begin = samples * static_cast<std::int64_t>(chunk) / chunks;
    const std::int64_t end = samples * static_cast<std::int64_t>(chunk + 1) / chunks;
    const double trace_scale = beta == 4 ? 0.5 : 1.0;
    for (std::int64_t s = begin; s < end; ++s) {
      Matrix x = sample(beta, n, c, rng);
      double value = 1;
      for (int j : powers) {
        Matrix p = x;
        for (int k = 1; k < j; ++k) p = p * x;
        value *= trace_scale * p.trace().real();
      }
      sum[chunk] += value;
      sum_sq[chunk] += value * value;
    }
  });
  double s = 0, s2 = 0;
  for (std::int64_t k = 0; k < chunks; ++k) {
    s += sum[k];
    s2 += sum_sq[k];
  }
  McEstimate est;
  est.samples = samples;
  est.mean = s / samples;
  const double var = (s2 / samples - est.mean * est.mean) * samples / (samples - 1);
  est.standard_error = std::sqrt(std::max(var, 0.0) / samples);
  return est;
}

}  // namespace moebius
