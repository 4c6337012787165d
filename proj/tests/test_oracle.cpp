#include <doctest.h>

#include <cmath>
#include <functional>

#include "moebius/config.hpp"
#include "moebius/errors.hpp"
#include "moebius/oracle.hpp"
#include "moebius/parallel.hpp"

using namespace moebius;

namespace {

using Entry = std::array<int, 2>;

// Isserlis pairings over entries of an n x n matrix; prop is the entry
// covariance.
BigRational pair_sum(const std::vector<Entry>& xs, const std::function<int(Entry, Entry)>& prop) {
  if (xs.empty()) return 1;
  BigRational total = 0;
  for (std::size_t k = 1; k < xs.size(); ++k) {
    int c = prop(xs[0], xs[k]);
    if (c == 0) continue;
    std::vector<Entry> rest;
    for (std::size_t m = 1; m < xs.size(); ++m)
      if (m != k) rest.push_back(xs[m]);
    total += c * pair_sum(rest, prop);
  }
  return total;
}

BigRational trace_moment(const std::vector<int>& powers, int n,
                         const std::function<int(Entry, Entry)>& prop) {
  int len = 0;
  for (int j : powers) len += j;
  if (len % 2) return 0;
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

// exp(-1/4 tr S^2), real symmetric.
int goe_prop(Entry a, Entry b) {
  return int(a[0] == b[0] && a[1] == b[1]) + int(a[0] == b[1] && a[1] == b[0]);
}
// exp(-1/2 tr X^2), hermitian.
int gue_prop(Entry a, Entry b) { return int(a[0] == b[1] && a[1] == b[0]); }

BigRational moment(int beta, int n, std::vector<int> powers, BigRational c) {
  MomentQuery q;
  q.beta = beta;
  q.n = n;
  q.powers = std::move(powers);
  q.c = c;
  return eigenvalue_moment(q);
}

}  // namespace

TEST_CASE("second moments") {
  for (int n = 1; n <= 4; ++n) CHECK(moment(1, n, {2}, ratio(1, 4)) == n * n + n);
  CHECK(moment(2, 2, {2}, ratio(1, 2)) == 4);
  CHECK(moment(2, 3, {2}, ratio(1, 2)) == 9);
}

TEST_CASE("odd moments vanish") {
  for (int beta : {1, 2, 4})
    for (int n = 1; n <= 3; ++n) {
      CHECK(moment(beta, n, {1}, ratio(1, 4)) == 0);
      CHECK(moment(beta, n, {3}, ratio(1, 4)) == 0);
      CHECK(moment(beta, n, {1, 2}, ratio(1, 4)) == 0);
    }
}

TEST_CASE("real symmetric moments against Isserlis") {
  std::vector<std::vector<int>> cases = {{2}, {1, 1}, {4}, {2, 2}, {1, 3}, {1, 1, 2}, {3, 3}, {6}};
  for (int n = 1; n <= 3; ++n)
    for (auto& p : cases) {
      int deg = 0;
      for (int j : p) deg += j;
      if (n == 3 && deg > 4) continue;
      CAPTURE(n);
      CHECK(moment(1, n, p, ratio(1, 4)) == trace_moment(p, n, goe_prop));
      MomentQuery q{1, n, p, ratio(1, 4)};
      CHECK(entry_moment(q) == trace_moment(p, n, goe_prop));
    }
}

TEST_CASE("hermitian moments against Isserlis") {
  std::vector<std::vector<int>> cases = {{2}, {1, 1}, {4}, {2, 2}, {1, 3}, {6}, {3, 3}};
  for (int n = 1; n <= 3; ++n)
    for (auto& p : cases) {
      int deg = 0;
      for (int j : p) deg += j;
      if (n == 3 && deg > 4) continue;
      CAPTURE(n);
      CHECK(moment(2, n, p, ratio(1, 2)) == trace_moment(p, n, gue_prop));
    }
}

TEST_CASE("scalar case") {
  // n = 1: the Vandermonde factor is trivial for every beta.
  for (int beta : {1, 2, 4}) {
    CHECK(moment(beta, 1, {2}, ratio(1, 4)) == 2);
    CHECK(moment(beta, 1, {4}, ratio(1, 4)) == 12);
  }
}

TEST_CASE("oracle agrees with the graph expansion") {
  ExpansionOptions o;
  o.max_degree = 4;
  auto r = oracle_compare(1, NormalizationTag::master, o, {2});
  CHECK(!r.empty());
  for (auto& x : r) CHECK(x.equal);

  o.max_degree = 2;
  auto q = oracle_compare(4, NormalizationTag::master, o, {1});
  bool saw_t2 = false;
  for (auto& x : q) {
    CHECK(x.equal);
    if (x.monomial == Monomial{2}) saw_t2 = true;
  }
  CHECK(saw_t2);

  o.max_degree = 4;
  auto logz = expand_logZ(2, NormalizationTag::master, o);
  auto g = oracle_compare(2, NormalizationTag::master, o, {3});
  for (auto& x : g) CHECK(x.equal);
  // Monomials whose catalog graphs are all non-orientable vanish on both sides.
  for (auto& e : connected_catalog(o)) {
    auto m = monomial_of(e.topology);
    bool any_orientable = false;
    for (auto& f : connected_catalog(o))
      if (monomial_of(f.topology) == m && f.topology.natural == 1) any_orientable = true;
    if (any_orientable) continue;
    CHECK(logz.coeff(m).is_zero());
    for (auto& x : g)
      if (x.monomial == m) CHECK(x.exact == 0);
  }
}

TEST_CASE("other tags") {
  ExpansionOptions o;
  o.max_degree = 4;
  for (auto& x : oracle_compare(2, NormalizationTag::hermitian, o, {1, 2})) CHECK(x.equal);
  for (auto& x : oracle_compare(4, NormalizationTag::gse_penner, o, {1, 2})) CHECK(x.equal);
  for (auto& x : oracle_compare(1, NormalizationTag::rescaled, o, {2})) CHECK(x.equal);
}

TEST_CASE("short coupling table") {
  ExpansionOptions o;
  o.max_degree = 4;
  TagDictionary d{ratio(1, 4), {0, 1, 1}};
  CHECK_THROWS_AS(oracle_log_z(1, 2, d, o), PreconditionError);
}

TEST_CASE("degree budget") {
  auto saved = budgets();
  Budgets tight = saved;
  tight.oracle_degree = 2;
  set_budgets(tight);
  ExpansionOptions o;
  o.max_degree = 4;
  CHECK_THROWS_AS(oracle_compare(1, NormalizationTag::master, o, {2}), ResourceError);
  set_budgets(saved);
}

TEST_CASE("Monte Carlo") {
  auto a = mc_estimate(1, 2, {2}, 20000, 42, 0.25);
  CHECK(std::abs(a.mean - 6) < 4 * a.standard_error);
  auto b = mc_estimate(2, 2, {2}, 20000, 43, 0.5);
  CHECK(std::abs(b.mean - 4) < 4 * b.standard_error);
  double exact4 = moment(4, 2, {2}, ratio(1, 4)).get_d();
  auto c = mc_estimate(4, 2, {2}, 20000, 44, 0.25);
  CHECK(std::abs(c.mean - exact4) < 4 * c.standard_error);

  int saved = thread_count();
  set_thread_count(1);
  auto one = mc_estimate(1, 3, {1, 1}, 5000, 9, 0.25);
  set_thread_count(4);
  auto four = mc_estimate(1, 3, {1, 1}, 5000, 9, 0.25);
  set_thread_count(saved);
  CHECK(one.mean == four.mean);
  CHECK(one.standard_error == four.standard_error);
}
