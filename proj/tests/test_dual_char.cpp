#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>

#include "moebius/dual_char.hpp"
#include "moebius/errors.hpp"

using namespace moebius;

namespace {

using Entry = std::array<int, 2>;
using Prop = std::function<BigRational(Entry, Entry)>;

BigRational pair_sum(const std::vector<Entry>& xs, const Prop& prop) {
  if (xs.empty()) return 1;
  if (xs.size() % 2) return 0;
  BigRational total = 0;
  for (std::size_t k = 1; k < xs.size(); ++k) {
    BigRational c = prop(xs[0], xs[k]);
    if (c == 0) continue;
    std::vector<Entry> rest;
    for (std::size_t m = 1; m < xs.size(); ++m)
      if (m != k) rest.push_back(xs[m]);
    total += c * pair_sum(rest, prop);
  }
  return total;
}

// det(lambda - X) expanded over permutations: lambda power, sign, entries.
struct DetTerm {
  int power;
  int sign;
  std::vector<Entry> entries;
};

std::vector<DetTerm> det_terms(int n) {
  std::vector<DetTerm> out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) inversions += perm[a] > perm[b];
    int sign = inversions % 2 ? -1 : 1;
    for (int mask = 0; mask < (1 << n); ++mask) {
      DetTerm t{0, sign, {}};
      bool ok = true;
      for (int i = 0; i < n; ++i) {
        if (mask >> i & 1) {
          if (perm[i] != i) ok = false;
          ++t.power;
        } else {
          t.sign = -t.sign;
          t.entries.push_back({i, perm[i]});
        }
      }
      if (ok) out.push_back(t);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// E prod_{l<k} det(lambda_l - X) by Isserlis.
LambdaPolynomial expected_char_product(int n, int k, const Prop& prop) {
  auto terms = det_terms(n);
  LambdaPolynomial out;
  std::vector<std::size_t> pick(k, 0);
  while (true) {
    std::vector<int> expo(k);
    std::vector<Entry> xs;
    int sign = 1;
    for (int l = 0; l < k; ++l) {
      const auto& t = terms[pick[l]];
      expo[l] = t.power;
      sign *= t.sign;
      xs.insert(xs.end(), t.entries.begin(), t.entries.end());
    }
    BigRational v = sign * pair_sum(xs, prop);
    if (v != 0) {
      out[expo] += v;
      if (out[expo] == 0) out.erase(expo);
    }
    int l = 0;
    while (l < k && ++pick[l] == terms.size()) pick[l++] = 0;
    if (l == k) break;
  }
  return out;
}

BigRational at(const LambdaSeries& s, const Monomial& m, int n) { return s.coeff(m).evaluate(n); }

}  // namespace

TEST_CASE("dual of small graphs") {
  auto d = poincare_dual(graphs::loop(false));
  auto t = topology(d);
  CHECK(t.v == 2);
  CHECK(t.f == 1);
  CHECK(t.chi == 2);
  CHECK(t.v_profile == std::map<int, int>{{1, 2}});

  auto th = topology(graphs::theta());
  auto dt = topology(poincare_dual(graphs::theta()));
  CHECK(dt.v == 3);
  CHECK(dt.f == 2);
  CHECK(dt.v_profile == th.f_profile);
  CHECK(dt.f_profile == th.v_profile);
}

TEST_CASE("dual over the catalog") {
  for (auto& p : profiles_up_to(6))
    for (auto& e : enumerate_graphs(p)) {
      auto d = poincare_dual(e.graph);
      auto t = topology(d);
      CHECK(t.chi == e.topology.chi);
      CHECK(t.natural == e.topology.natural);
      CHECK(t.v_profile == e.topology.f_profile);
      CHECK(t.f_profile == e.topology.v_profile);
      CHECK(canonical_code(poincare_dual(d)) == e.code);
      CHECK(automorphism_count(d) == e.aut_moebius);
      if (e.topology.natural == 1)
        CHECK(automorphism_count(d, Family::ribbon) == *e.aut_ribbon);
      // (-1)^(sigma + e + v) = (-1)^f
      CHECK((e.topology.sigma + e.topology.e + e.topology.v - e.topology.f) % 2 == 0);
    }
}

TEST_CASE("one-edge terms") {
  auto gue = charpoly_lhs(Ensemble::gue, 2);
  CHECK(gue.coeff({1, 1}) == NPolynomial(ratio(1, 2)));
  CHECK(gue.coeff({2}) == NPolynomial::monomial(1, ratio(-1, 2)));
  auto goe = charpoly_lhs(Ensemble::goe, 2);
  // The twisted loop adds a term absent on the unitary side.
  CHECK(goe.coeff({2}) == NPolynomial::monomial(1, ratio(-1, 4)) + NPolynomial(ratio(-1, 4)));
  CHECK(charpoly_lhs(Ensemble::gue, 0).is_zero());
  CHECK_THROWS_AS(charpoly_lhs(Ensemble::gse, 4), PreconditionError);
  CHECK_THROWS_AS(charpoly_rhs(Ensemble::goe, 4), PreconditionError);
  CHECK(parse_ensemble("GOE") == Ensemble::goe);
  CHECK_THROWS_AS(parse_ensemble("cue"), UsageError);
}

TEST_CASE("both sides agree") {
  CHECK(charpoly_lhs(Ensemble::gue, 6) == charpoly_rhs(Ensemble::gue, 6));
  CHECK(charpoly_lhs(Ensemble::goe, 6) == charpoly_rhs(Ensemble::gse, 6));
}

TEST_CASE("N x N series against eigenvalue moments") {
  for (auto ens : {Ensemble::gue, Ensemble::goe}) {
    auto s = charpoly_lhs(ens, 6);
    for (int n = 1; n <= 3; ++n) {
      auto oracle = charpoly_lhs_oracle(ens, n, 6);
      CHECK(!oracle.empty());
      for (auto& [m, v] : oracle) {
        CAPTURE(monomial_to_string(m, "tau"));
        CHECK(at(s, m, n) == v);
      }
      for (auto& [m, c] : s.terms()) {
        bool listed = false;
        for (auto& [m2, v] : oracle) listed |= m2 == m;
        if (!listed) CHECK(c.evaluate(n) == 0);
      }
    }
  }
}

TEST_CASE("polynomial identities") {
  // exp(-N/2 tr X^2): hermitian entries have covariance 1/N, real symmetric
  // entries (1 + delta)/(2N).
  for (int n = 1; n <= 2; ++n) {
    Prop gue = [n](Entry a, Entry b) {
      return a[0] == b[1] && a[1] == b[0] ? ratio(1, n) : BigRational(0);
    };
    Prop goe = [n](Entry a, Entry b) {
      int c = int(a[0] == b[0] && a[1] == b[1]) + int(a[0] == b[1] && a[1] == b[0]);
      return ratio(c, 2 * n);
    };
    for (int k = 1; k <= 2; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      auto bhc = verify_polynomial_identity(n, k, CharpolyIdentity::bhc);
      CHECK(bhc.equal);
      CHECK(bhc.lhs == bhc.rhs);
      CHECK(bhc.lhs == expected_char_product(n, k, gue));
      auto bhq = verify_polynomial_identity(n, k, CharpolyIdentity::bhq);
      CHECK(bhq.equal);
      CHECK(bhq.lhs == expected_char_product(n, k, goe));
    }
  }
  auto r = verify_polynomial_identity(2, 1, CharpolyIdentity::bhq);
  CHECK(to_string(r.lhs) == "lambda_1^2 - 1/4");
  CHECK(verify_polynomial_identity(3, 1, CharpolyIdentity::bhc).equal);
  CHECK(verify_polynomial_identity(3, 1, CharpolyIdentity::bhq).equal);
  CHECK_THROWS_AS(verify_polynomial_identity(4, 1, CharpolyIdentity::bhc), PreconditionError);
  CHECK_THROWS_AS(verify_polynomial_identity(1, 3, CharpolyIdentity::bhq), PreconditionError);
  CHECK(parse_identity("BHQ") == CharpolyIdentity::bhq);
}
