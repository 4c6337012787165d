#include <doctest.h>

#include <functional>
#include <random>

#include "moebius/errors.hpp"
#include "moebius/expansion.hpp"
#include "moebius/npoly.hpp"
#include "moebius/series.hpp"

using namespace moebius;

namespace {

// Gaussian moments of matrix entries by Isserlis pairings. An entry is an
// index pair (i, j); prop gives the covariance of two entries.
using Entry = std::array<int, 2>;
using Propagator = std::function<BigRational(Entry, Entry)>;

BigRational pair_sum(std::vector<Entry>& xs, const Propagator& prop) {
  if (xs.empty()) return 1;
  if (xs.size() % 2) return 0;
  Entry first = xs.front();
  BigRational total = 0;
  for (std::size_t k = 1; k < xs.size(); ++k) {
    BigRational c = prop(first, xs[k]);
    if (c == 0) continue;
    std::vector<Entry> rest;
    for (std::size_t m = 1; m < xs.size(); ++m)
      if (m != k) rest.push_back(xs[m]);
    total += c * pair_sum(rest, prop);
  }
  return total;
}

// E[prod_l tr X^{j_l}] for an n x n matrix.
BigRational trace_moment(const std::vector<int>& powers, int n, const Propagator& prop) {
  int len = 0;
  for (int j : powers) len += j;
  std::vector<int> idx(len, 0);
  BigRational total = 0;
  while (true) {
    std::vector<Entry> xs;
    int pos = 0;
    for (int j : powers) {
      for (int a = 0; a < j; ++a) xs.push_back({idx[pos + a], idx[pos + (a + 1) % j]});
      pos += j;
    }
    total += pair_sum(xs, prop);
    int k = 0;
    while (k < len && ++idx[k] == n) idx[k++] = 0;
    if (k == len) break;
  }
  return total;
}

// Real symmetric, exp(-1/4 tr S^2).
BigRational goe_prop(Entry a, Entry b) {
  return BigRational(int(a[0] == b[0] && a[1] == b[1]) + int(a[0] == b[1] && a[1] == b[0]));
}

// Hermitian, exp(-1/2 tr X^2).
BigRational gue_prop(Entry a, Entry b) { return BigRational(int(a[0] == b[1] && a[1] == b[0])); }

BigRational at(const CouplingSeries& s, const Monomial& m, int n) {
  return s.coeff(m).evaluate(n);
}

CouplingSeries random_series(std::mt19937& rng, int max_degree) {
  CouplingSeries s(max_degree);
  std::uniform_int_distribution<int> idx(1, 4), num(-5, 5), den(1, 4), expo(-2, 3);
  for (int k = 0; k < 6; ++k) {
    Monomial m;
    int len = 1 + rng() % 2;
    for (int a = 0; a < len; ++a) m.push_back(idx(rng));
    BigRational c(num(rng), den(rng));
    c.canonicalize();
    s.add_term(m, NPolynomial::monomial(expo(rng), c));
  }
  return s;
}

}  // namespace

TEST_CASE("N polynomials") {
  NPolynomial p = NPolynomial::monomial(2, ratio(1, 4)) + NPolynomial::monomial(1, ratio(1, 4));
  CHECK(p.evaluate(2) == BigRational(3, 2));
  CHECK(p.scale_argument(2) == NPolynomial::monomial(2) + NPolynomial::monomial(1, ratio(1, 2)));
  CHECK(p.shift(-1).max_exponent() == 1);
  CHECK((p - p).is_zero());
  CHECK(to_string(NPolynomial::monomial(-1, ratio(-1, 3)) + NPolynomial(2)) == "2 - 1/3*N^-1");

  AlphaNPolynomial a = AlphaNPolynomial::monomial(1, 2, ratio(3, 2)) + AlphaNPolynomial(1);
  CHECK(a.dual() == AlphaNPolynomial::monomial(3, 2, ratio(3, 2)) + AlphaNPolynomial(1));
  CHECK(a.dual().dual() == a);
  CHECK_THROWS_AS(a.at_alpha(2), ConsistencyError);
  CHECK(AlphaNPolynomial::monomial(2, 1).at_alpha(ratio(1, 2)) ==
        NPolynomial::monomial(1, ratio(1, 2)));
}

TEST_CASE("series ring") {
  CouplingSeries t3(8);
  t3.add_term({3}, NPolynomial(1));
  auto sq = t3 * t3;
  CHECK(sq.terms().size() == 1);
  CHECK(weighted_degree(sq.terms().begin()->first) == 6);
  CHECK((sq * t3).is_zero());

  CHECK(exp(CouplingSeries(8)) == CouplingSeries::one(8));
  CHECK_THROWS_AS(t3 + CouplingSeries(6), UsageError);
  CHECK_THROWS_AS(exp(CouplingSeries::one(4)), PreconditionError);
  CHECK_THROWS_AS(log(t3), PreconditionError);
  CHECK(monomial_to_string({1, 1, 3}) == "t_1^2*t_3");
}

TEST_CASE("log inverts exp") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto s = random_series(rng, 8);
    CHECK(log(exp(s)) == s);
  }
}

TEST_CASE("first-order GOE coefficient") {
  ExpansionOptions o;
  o.max_degree = 2;
  auto s = expand_logZ(1, NormalizationTag::master, o);
  CHECK(s.coeff({2}) ==
        NPolynomial::monomial(2, ratio(1, 4)) + NPolynomial::monomial(1, ratio(1, 4)));
}

TEST_CASE("hermitian t_2 coefficient") {
  ExpansionOptions o;
  o.max_degree = 2;
  auto s = expand_logZ(2, NormalizationTag::hermitian, o);
  CHECK(s.coeff({2}) == NPolynomial::monomial(2, ratio(1, 2)));
}

TEST_CASE("GOE expansion against Isserlis moments") {
  ExpansionOptions o;
  o.max_degree = 6;
  auto s = expand_logZ(1, NormalizationTag::master, o);
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    auto m = [&](std::vector<int> p) { return trace_moment(p, n, goe_prop); };
    CHECK(at(s, {2}, n) == m({2}) / 4);
    CHECK(at(s, {4}, n) == m({4}) / 8);
    CHECK(at(s, {1, 1}, n) == m({1, 1}) / 8);
    CHECK(at(s, {1, 3}, n) == m({1, 3}) / 12);
    BigRational var2 = m({2, 2}) - m({2}) * m({2});
    CHECK(at(s, {2, 2}, n) == var2 / 32);
    if (n <= 2) CHECK(at(s, {3, 3}, n) == m({3, 3}) / 72);
  }
}

TEST_CASE("hermitian expansion against Isserlis moments") {
  ExpansionOptions o;
  o.max_degree = 6;
  auto s = expand_logZ(2, NormalizationTag::hermitian, o);
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    auto m = [&](std::vector<int> p) { return trace_moment(p, n, gue_prop); };
    CHECK(at(s, {4}, n) == m({4}) / 4);
    CHECK(at(s, {1, 1}, n) == m({1, 1}) / 2);
    CHECK(at(s, {2, 4}, n) == (m({2, 4}) - m({2}) * m({4})) / 8);
    if (n <= 2) CHECK(at(s, {6}, n) == m({6}) / 6);
  }
}

TEST_CASE("non-orientable graphs vanish at beta 2") {
  ExpansionOptions o;
  o.max_degree = 6;
  for (auto& e : connected_catalog(o))
    if (e.topology.natural == -1)
      CHECK(graph_weight(e, NormalizationTag::master, 2).is_zero());
}

TEST_CASE("tags are related by rescaling the couplings") {
  ExpansionOptions o;
  o.max_degree = 6;
  for (int beta : {1, 2, 4}) {
    auto master = expand_logZ(beta, NormalizationTag::master, o);
    auto rescaled = expand_logZ(beta, NormalizationTag::rescaled, o);
    auto alpha = ratio(beta, 2);
    auto invariant = expand_logZ_invariant(alpha, o);
    // X -> X / sqrt(b) turns the rescaled exponent into the master one with
    // t_j -> b^(1 - j/2) t_j; X -> X / sqrt(N) gives the invariant one.
    auto expected_rescaled = master.map_coefficients([&](const Monomial& m, const NPolynomial& c) {
      int v_minus_e = int(m.size()) - weighted_degree(m) / 2;
      return c * pow(BigRational(beta), v_minus_e);
    });
    auto expected_invariant = rescaled.map_coefficients([&](const Monomial& m, const NPolynomial& c) {
      return c.shift(int(m.size()) - weighted_degree(m) / 2);
    });
    CHECK(rescaled == expected_rescaled);
    CHECK(invariant == expected_invariant);
  }
  CHECK(expand_logZ(2, NormalizationTag::hermitian, o) ==
        expand_logZ(2, NormalizationTag::rescaled, o));
  auto gse = expand_logZ(4, NormalizationTag::gse_penner, o);
  auto master4 = expand_logZ(4, NormalizationTag::master, o);
  CHECK(gse == master4.map_coefficients([](const Monomial& m, const NPolynomial& c) {
    return c * pow(BigRational(2), int(m.size()) - weighted_degree(m) / 2);
  }));
  CHECK_THROWS(expand_logZ(1, NormalizationTag::hermitian, o));
}

TEST_CASE("Z and log Z") {
  ExpansionOptions o;
  o.max_degree = 4;
  auto logz = expand_logZ(1, NormalizationTag::master, o);
  auto z = expand_Z(1, NormalizationTag::master, o);
  CHECK(constant_term(z) == NPolynomial(1));
  CHECK(log(z) == logz);
  auto c2 = logz.coeff({2});
  CHECK(z.coeff({2, 2}) == logz.coeff({2, 2}) + c2 * c2 * ratio(1, 2));
}

TEST_CASE("coupling restrictions") {
  ExpansionOptions o;
  o.max_degree = 6;
  o.include_t1 = false;
  o.include_t2 = false;
  auto s = expand_logZ(1, NormalizationTag::master, o);
  for (auto& [m, c] : s.terms())
    for (int j : m) CHECK(j >= 3);
  o.max_excess = 1;
  auto low = expand_logZ(1, NormalizationTag::master, o);
  for (auto& [m, c] : low.terms())
    CHECK(weighted_degree(m) / 2 - int(m.size()) <= 1);
}

TEST_CASE("duality") {
  ExpansionOptions o;
  o.max_degree = 6;
  auto sym = expand_logZ_invariant(o);
  CHECK(apply_duality(sym) == sym);
  for (auto alpha : {ratio(1, 2), ratio(1, 1), ratio(2, 1)}) {
    auto at_alpha = expand_logZ_invariant(alpha, o);
    auto at_inverse = expand_logZ_invariant(1 / alpha, o);
    CHECK(apply_duality(at_inverse, alpha) == at_alpha);
    auto r = verify_duality(alpha, o);
    CHECK(r.holds());
    CHECK(r.graphs_checked > 0);
  }
  // A twisted loop has chi = 1 and picks up one sign from (-alpha N)^chi.
  for (auto& e : connected_catalog(o))
    if (e.topology.v == 1 && e.topology.e == 1 && e.topology.natural == -1) {
      auto w = invariant_weight(e);
      auto d = w.dual();
      CHECK(d == w);
      for (auto& [key, c] : w.terms()) CHECK(key.second == 1);
    }
  // GUE: orientable terms are fixed pointwise at alpha = 1.
  for (auto& e : connected_catalog(o))
    if (e.topology.natural == 1) {
      auto w = invariant_weight(e).at_alpha(1);
      CHECK(w.scale_argument(-1) == w);
    }
}
