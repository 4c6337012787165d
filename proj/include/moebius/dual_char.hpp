#pragma once

#include <map>
#include <string>
#include <vector>

#include "moebius/enumerate.hpp"
#include "moebius/graph.hpp"
#include "moebius/rational.hpp"
#include "moebius/series.hpp"

namespace moebius {

// Dual graph: one vertex per face, one edge across each edge. Built on the
// flag involutions by exchanging the vertex-changing and face-changing
// moves. Vertex stars start at primal side-0 flags, so an untwisted
// orientable graph has an untwisted dual with the induced orientation.
MoebiusGraph poincare_dual(const MoebiusGraph& g);

// Series in tau_j = tr Lambda^-j (monomial entry j stands for tau_j),
// coefficients Laurent in N.
using LambdaSeries = CouplingSeries;

enum class Ensemble { goe, gue, gse };
std::string to_string(Ensemble e);
Ensemble parse_ensemble(const std::string& name);

// N x N side, log of the averaged product of det(1 - X/lambda_l):
//   GUE: sum over ribbon graphs of (-1)^v N^(f-e) prod tau^v(j) / |Aut_R|
//   GOE: sum over Möbius graphs of (-1)^v 2^(v-e) N^(f-e) prod tau^v(j) / |Aut|
// Valences from 1 up, weighted degree 2e <= max_degree.
LambdaSeries charpoly_lhs(Ensemble ensemble, int max_degree);
// k x k side, faces carry the tau's:
//   GUE: sum over ribbon graphs of (-1)^f N^(v-e) prod tau^f(j) / |Aut_R|
//   GSE: sum over Möbius graphs of (-1)^f 2^(f-e) N^(v-e) prod tau^f(j) / |Aut|
LambdaSeries charpoly_rhs(Ensemble ensemble, int max_degree);

// Oracle for charpoly_lhs at N = n: log E[exp(-sum tau_j/j tr X^j)] under
// exp(-n/2 tr X^2), from exact eigenvalue moments. Rational coefficients.
std::vector<std::pair<Monomial, BigRational>> charpoly_lhs_oracle(Ensemble ensemble, int n,
                                                                  int max_degree);

// Polynomial in lambda_1..lambda_k: exponent vector -> coefficient.
using LambdaPolynomial = std::map<std::vector<int>, BigRational>;
std::string to_string(const LambdaPolynomial& p);

enum class CharpolyIdentity {
  // GUE N x N products of det(lambda_l - X), exp(-N/2 tr X^2), against
  // E[det^N(Lambda - i Y)] over k x k GUE with exp(-N/2 tr Y^2).
  bhc,
  // GOE N x N, exp(-N/2 tr S^2), against E[Hdet^N(Lambda - i X)] over k x k
  // self-dual quaternion matrices with exp(-N tr X^2).
  bhq
};
std::string to_string(CharpolyIdentity which);
CharpolyIdentity parse_identity(const std::string& name);

struct IdentityReport {
  CharpolyIdentity which = CharpolyIdentity::bhc;
  int n = 0;
  int k = 0;
  LambdaPolynomial lhs;
  LambdaPolynomial rhs;
  bool equal = false;
};

// Both sides computed exactly: the N x N side from eigenvalue moments via
// Newton's identities, the k x k side from Gaussian moments of the matrix
// entries. Throws VerificationFailure naming the first differing
// coefficient. Needs 1 <= n <= 3 and 1 <= k <= 2.
IdentityReport verify_polynomial_identity(int n, int k, CharpolyIdentity which);

}  // namespace moebius
