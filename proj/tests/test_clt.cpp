#include <doctest.h>

#include "moebius/clt.hpp"
#include "moebius/errors.hpp"

using namespace moebius;

namespace {

// Large-N covariance of tr X^a and tr X^b for the semicircle law of radius 2:
// expand x^a in 2 T_k(x/2), whose covariances are k delta_kl.
BigRational semicircle_covariance(int a, int b) {
  BigRational total = 0;
  for (int k = 1; k <= std::min(a, b); ++k) {
    if ((a - k) % 2 || (b - k) % 2) continue;
    total += k * BigRational(binomial(a, (a - k) / 2) * binomial(b, (b - k) / 2));
  }
  return total;
}

}  // namespace

TEST_CASE("limit quadratic form") {
  auto one = clt_limit(1, 4);
  CHECK(one.coeff(1, 1) == ratio(1, 2));
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      BigRational expected = semicircle_covariance(a, b) / (a * b);
      if (a == b) expected /= 2;
      CHECK(one.coeff(a, b) == expected);
      if ((a + b) % 2) CHECK(one.coeff(a, b) == 0);
    }
  auto half = clt_limit(ratio(1, 2), 4);
  auto two = clt_limit(2, 4);
  CHECK(two.coeff(1, 1) == 1);
  for (auto& [key, c] : one.coefficients) {
    CHECK(half.coeff(key.first, key.second) == c / 2);
    CHECK(two.coeff(key.first, key.second) == 4 * half.coeff(key.first, key.second));
  }
  CHECK_THROWS_AS(clt_limit(3, 4), PreconditionError);
}

TEST_CASE("log V has no positive powers of N") {
  for (auto alpha : {ratio(1, 2), ratio(1, 1), ratio(2, 1)}) {
    for (int d : {4, 6}) {
      auto r = verify_clt(alpha, 4, d);
      CHECK(r.equal);
      CHECK(r.max_n_exponent <= 0);
      CHECK(r.graphs_checked > 0);
      for (auto& [key, c] : r.n0_part) {
        CHECK(key.first + key.second <= d);
        CHECK(c == r.limit.coeff(key.first, key.second));
      }
    }
  }
  auto r = verify_clt(1, 4, 4);
  // Degree 4: (1,1), (1,3), (2,2).
  CHECK(r.n0_part.size() == 3);
}
