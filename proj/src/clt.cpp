#include "moebius/clt.hpp"

#include <algorithm>
#include <limits>

#include "moebius/enumerate.hpp"
#include "moebius/errors.hpp"

namespace moebius {

namespace {

void check_alpha(const BigRational& alpha) {
  if (alpha != BigRational(1, 2) && alpha != 1 && alpha != 2)
    throw PreconditionError("alpha must be 1/2, 1 or 2, got " + to_string(alpha));
}

}  // namespace

BigRational CLTResult::coeff(int j1, int j2) const {
  auto it = coefficients.find({std::min(j1, j2), std::max(j1, j2)});
  return it == coefficients.end() ? BigRational(0) : it->second;
}

CLTResult clt_limit(const BigRational& alpha, int j_max) {
  check_alpha(alpha);
  if (j_max < 1) throw PreconditionError("j_max must be at least 1");
  CLTResult r{alpha, j_max, {}};
  for (int j1 = 1; j1 <= j_max; ++j1)
    for (int j2 = j1; j2 <= j_max; j2 += 1) {
      if ((j1 + j2) % 2 != 0) continue;
      DegreeProfile p;
      ++p[j1];
      ++p[j2];
      BigRational sum = 0;
      for (const auto& e : enumerate_graphs(p, true, Family::ribbon))
        if (e.topology.chi == 2) sum += alpha / BigRational(e.aut_ribbon.value());
      if (sum != 0) r.coefficients[{j1, j2}] = sum;
    }
  return r;
}

CLTReport verify_clt(const BigRational& alpha, int j_max, int max_degree) {
  check_alpha(alpha);
  CLTReport rep;
  rep.alpha = alpha;
  rep.j_max = j_max;
  rep.max_degree = max_degree;
  ExpansionOptions opts;
  opts.max_degree = max_degree;

  // Graph-level check of the N-exponent chi - v.
  rep.max_n_exponent = std::numeric_limits<int>::min();
  for (const auto& e : connected_catalog(opts)) {
    const auto& t = e.topology;
    ++rep.graphs_checked;
    if (t.v < 2) continue;
    const int power = t.chi - t.v;
    if (power > 0 || (power == 0 && !(t.chi == 2 && t.v == 2 && t.natural == 1)))
      throw VerificationFailure("graph " + e.code + " with v=" + std::to_string(t.v) +
                                ", chi=" + std::to_string(t.chi) +
                                " contributes N^" + std::to_string(power) + " to log V");
  }

  const CouplingSeries logz = expand_logZ_invariant(alpha, opts);
  CouplingSeries log_v(max_degree);
  for (const auto& [m, c] : logz.terms()) {
    if (m.size() < 2) continue;
    log_v.add_term(m, c.shift(-static_cast<int>(m.size())));
  }
  for (const auto& [m, c] : log_v.terms()) {
    const int top = c.max_exponent();
    rep.max_n_exponent = std::max(rep.max_n_exponent, top);
    if (top > 0)
      throw VerificationFailure("log V has N^" + std::to_string(top) + " in the coefficient of " +
                                monomial_to_string(m));
    const BigRational c0 = c.coeff(0);
    if (c0 == 0) continue;
    if (m.size() != 2)
      throw VerificationFailure("N^0 term at " + monomial_to_string(m) +
                                " does not come from two vertices");
    if (m[0] <= j_max && m[1] <= j_max) rep.n0_part[{m[0], m[1]}] = c0;
  }

  rep.limit = clt_limit(alpha, j_max);
  std::map<std::pair<int, int>, BigRational> expected;
  for (const auto& [key, c] : rep.limit.coefficients)
    if (key.first + key.second <= max_degree) expected[key] = c;
  rep.equal = expected == rep.n0_part;
  if (!rep.equal) {
    for (const auto* side : {&expected, &rep.n0_part})
      for (const auto& [key, c] : *side) {
        const BigRational a = expected.count(key) ? expected.at(key) : BigRational(0);
        const BigRational b = rep.n0_part.count(key) ? rep.n0_part.at(key) : BigRational(0);
        if (a != b)
          throw VerificationFailure("CLT coefficient of t_" + std::to_string(key.first) +
                                    "*t_" + std::to_string(key.second) + ": limit " +
                                    to_string(a) + ", log V " + to_string(b));
      }
  }
  return rep;
}

}  // namespace moebius
