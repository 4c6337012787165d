#pragma once

#include <map>
#include <utility>

#include "moebius/expansion.hpp"
#include "moebius/rational.hpp"

namespace moebius {

// Large-N limit of log V(t, N, alpha): a quadratic form in the t_j.
struct CLTResult {
  BigRational alpha;
  int j_max = 0;
  // (j1, j2) with j1 <= j2 -> coefficient of the monomial t_j1 t_j2.
  std::map<std::pair<int, int>, BigRational> coefficients;

  BigRational coeff(int j1, int j2) const;
};

// Sum over connected planar ribbon graphs with two vertices of valences
// j1, j2 <= j_max of alpha / |Aut_R| t_j1 t_j2. alpha must be 1/2, 1 or 2.
CLTResult clt_limit(const BigRational& alpha, int j_max);

struct CLTReport {
  BigRational alpha;
  int j_max = 0;
  int max_degree = 0;
  // Largest power of N in log V (after removing one-vertex terms).
  int max_n_exponent = 0;
  // N^0 part of log V restricted to valences <= j_max.
  std::map<std::pair<int, int>, BigRational> n0_part;
  CLTResult limit;
  bool equal = false;
  long graphs_checked = 0;
};

// log V = invariant-tag log Z with couplings alpha t_j / j (each term
// divided by N^v) minus its one-vertex terms. Checks that no positive power
// of N survives, that N^0 comes only from planar orientable two-vertex
// graphs, and that the N^0 part equals clt_limit up to degree max_degree.
// Throws VerificationFailure otherwise.
CLTReport verify_clt(const BigRational& alpha, int j_max, int max_degree);

}  // namespace moebius
