#pragma once

#include <optional>
#include <string>
#include <vector>

#include "moebius/enumerate.hpp"
#include "moebius/series.hpp"

namespace moebius {

// Normalizations of the Gaussian integral; each fixes a per-graph weight.
//   master:     exp(-1/4 tr X^2 + sum t_j/(2j) tr X^j), weight mu N^f / |Aut|
//   rescaled:   exp(-b/4 tr X^2 + sum b t_j/(2j) tr X^j),
//               weight (-4+6b-b^2)^p (2-b)^sigma b^(chi-1) N^f / |Aut|
//   hermitian:  b = 2, exp(-1/2 tr X^2 + sum t_j/j tr X^j), weight 2 N^f / |Aut|
//               on orientable graphs
//   gse_penner: b = 4, same exponent as hermitian, weight (-1)^chi (2N)^f / |Aut|
//   invariant:  b = 2a, exp(-Na/2 tr X^2 + sum N a t_j/j tr X^j),
//               weight 2 a^(chi/2) N^chi (3-1/a-a)^p (a^(-1/2)-a^(1/2))^sigma / |Aut|
// with p = 1 - sigma/2 - chi/2.
enum class NormalizationTag { master, rescaled, hermitian, gse_penner, invariant };

std::string to_string(NormalizationTag tag);
NormalizationTag parse_tag(const std::string& name);

struct ExpansionOptions {
  int max_degree = 4;
  bool include_t1 = true;
  bool include_t2 = true;
  // Keep only graphs with e - v <= max_excess.
  std::optional<int> max_excess;
};

// Connected Möbius catalog covering every monomial allowed by the options.
std::vector<GraphCatalogEntry> connected_catalog(const ExpansionOptions& opts);

Monomial monomial_of(const TopologyProfile& t);

// Weight of one graph under a tag at integer beta (1, 2 or 4; hermitian needs
// 2 and gse_penner needs 4). Not defined for the invariant tag.
NPolynomial graph_weight(const GraphCatalogEntry& entry, NormalizationTag tag, int beta);
// Invariant-tag weight with symbolic alpha.
AlphaNPolynomial invariant_weight(const GraphCatalogEntry& entry);

CouplingSeries expand_logZ(int beta, NormalizationTag tag, const ExpansionOptions& opts);
AlphaSeries expand_logZ_invariant(const ExpansionOptions& opts);
// Invariant tag at a rational alpha (1/2, 1, 2, ...).
CouplingSeries expand_logZ_invariant(const BigRational& alpha, const ExpansionOptions& opts);
CouplingSeries expand_Z(int beta, NormalizationTag tag, const ExpansionOptions& opts);

// alpha -> 1/alpha, N -> -alpha N in every coefficient.
AlphaSeries apply_duality(const AlphaSeries& s);
// Numeric form: given the invariant expansion at 1/alpha, substitutes
// N -> -alpha N. The duality says the result is the expansion at alpha.
CouplingSeries apply_duality(const CouplingSeries& at_inverse_alpha, const BigRational& alpha);

struct DualityReport {
  BigRational alpha;
  int max_degree = 0;
  long graphs_checked = 0;
  // Every invariant-tag graph weight is fixed by the symbolic map.
  bool graph_by_graph = false;
  // The symbolic series is fixed.
  bool series_fixed = false;
  // N -> -alpha N applied to the expansion at 1/alpha gives the one at alpha.
  bool numeric = false;
  bool holds() const { return graph_by_graph && series_fixed && numeric; }
};

// Throws VerificationFailure naming the first graph or monomial that breaks
// the duality, unless throw_on_failure is false.
DualityReport verify_duality(const BigRational& alpha, const ExpansionOptions& opts,
                             bool throw_on_failure = true);

}  // namespace moebius
