#pragma once

#include <cstdint>
#include <vector>

#include "moebius/expansion.hpp"
#include "moebius/rational.hpp"

namespace moebius {

// E[prod_l p_{j_l}] with p_j = sum_i k_i^j under the eigenvalue density
// |Delta(k)|^beta prod_i exp(-c k_i^2) of an n x n Gaussian ensemble.
struct MomentQuery {
  int beta = 1;
  int n = 1;
  std::vector<int> powers;
  BigRational c = BigRational(1, 4);
};

// Exact value. beta = 2, 4 expand Delta^beta into monomials; beta = 1 uses
// the centre-of-mass split for n = 2 and the entry-level route for n >= 3.
BigRational eigenvalue_moment(const MomentQuery& q);

// Exact value from Gaussian moments of independent matrix entries
// (real symmetric matrices only, i.e. beta = 1).
BigRational entry_moment(const MomentQuery& q);

// Scale c and the coefficient k_j of t_j p_j in the exponent, per tag, for
// matrix size n and ensemble beta.
struct TagDictionary {
  BigRational c;
  std::vector<BigRational> coupling;  // index j
};
TagDictionary tag_dictionary(NormalizationTag tag, int beta, int n, int max_degree);

struct OracleReport {
  int beta = 0;
  int n = 0;
  Monomial monomial;
  BigRational exact;
  BigRational predicted;
  bool equal = false;
};

// log Z from eigenvalue moments, as a series with rational coefficients.
std::vector<std::pair<Monomial, BigRational>> oracle_log_z(int beta, NormalizationTag tag,
                                                           int n, const ExpansionOptions& opts);
// Same with an explicit scale and coupling table (coupling[j] for j <= max_degree).
std::vector<std::pair<Monomial, BigRational>> oracle_log_z(int beta, int n,
                                                           const TagDictionary& dict,
                                                           const ExpansionOptions& opts);

// Compares every coefficient of expand_logZ at N = n with the oracle. Throws
// VerificationFailure on the first mismatch unless throw_on_mismatch is false.
std::vector<OracleReport> oracle_compare(int beta, NormalizationTag tag,
                                         const ExpansionOptions& opts,
                                         const std::vector<int>& sizes,
                                         bool throw_on_mismatch = true);

struct McEstimate {
  double mean = 0;
  double standard_error = 0;
  std::int64_t samples = 0;
};

// Monte Carlo mean of prod_l tr X^{j_l} for density exp(-c tr X^2).
// Quaternion matrices are sampled through their 2n x 2n complex form, with
// tr X^j = 1/2 tr C(X)^j. Results depend only on the seed, not on the
// number of threads.
McEstimate mc_estimate(int beta, int n, const std::vector<int>& powers,
                       std::int64_t samples, std::uint64_t seed, double c);

}  // namespace moebius
