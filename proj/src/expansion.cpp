#include "moebius/expansion.hpp"

#include "moebius/errors.hpp"
#include "moebius/parallel.hpp"
#include "moebius/unit_sprinkle.hpp"

namespace moebius {

std::string to_string(NormalizationTag tag) {
  switch (tag) {
    case NormalizationTag::master: return "master";
    case NormalizationTag::rescaled: return "rescaled";
    case NormalizationTag::hermitian: return "hermitian";
    case NormalizationTag::gse_penner: return "gse-penner";
    case NormalizationTag::invariant: return "invariant";
  }
  return "?";
}

NormalizationTag parse_tag(const std::string& name) {
  for (auto tag : {NormalizationTag::master, NormalizationTag::rescaled,
                   NormalizationTag::hermitian, NormalizationTag::gse_penner,
                   NormalizationTag::invariant})
    if (to_string(tag) == name) return tag;
  if (name == "rescaled-beta") return NormalizationTag::rescaled;
  if (name == "invariant-alpha") return NormalizationTag::invariant;
  throw UsageError("unknown normalization tag '" + name + "'");
}

std::vector<GraphCatalogEntry> connected_catalog(const ExpansionOptions& opts) {
  const int min_valence = opts.include_t1 ? 1 : (opts.include_t2 ? 2 : 3);
  std::vector<GraphCatalogEntry> out;
  for (const auto& p : profiles_up_to(opts.max_degree, min_valence)) {
    if (!opts.include_t2 && p.count(2)) continue;
    if (opts.max_excess) {
      int v = 0;
      for (auto [j, c] : p) v += c;
      if (half_edge_count(p) / 2 - v > *opts.max_excess) continue;
    }
    for (auto& e : enumerate_graphs(p, true, Family::moebius)) out.push_back(std::move(e));
  }
  return out;
}

Monomial monomial_of(const TopologyProfile& t) {
  Monomial m;
  for (auto [j, c] : t.v_profile)
    for (int i = 0; i < c; ++i) m.push_back(j);
  return m;
}

NPolynomial graph_weight(const GraphCatalogEntry& entry, NormalizationTag tag, int beta) {
  const TopologyProfile& t = entry.topology;
  const BigRational inv_aut(1, entry.aut_moebius);
  switch (tag) {
    case NormalizationTag::master:
      return NPolynomial::monomial(t.f, BigRational(mu_closed_form(t, beta)) * inv_aut);
    case NormalizationTag::rescaled: {
      if (beta != 1 && beta != 2 && beta != 4)
        throw PreconditionError("beta must be 1, 2 or 4");
      const int twice = 2 - t.sigma - t.chi;
      BigRational w = pow(BigRational(-4 + 6 * beta - beta * beta), twice / 2) *
                      pow(BigRational(2 - beta), t.sigma) * pow(BigRational(beta), t.chi - 1);
      return NPolynomial::monomial(t.f, w * inv_aut);
    }
    case NormalizationTag::hermitian:
      if (beta != 2) throw PreconditionError("hermitian tag requires beta = 2");
      if (t.natural != 1) return NPolynomial();
      return NPolynomial::monomial(t.f, 2 * inv_aut);
    case NormalizationTag::gse_penner: {
      if (beta != 4) throw PreconditionError("gse-penner tag requires beta = 4");
      BigRational w = pow(BigRational(2), t.f) * (t.chi % 2 == 0 ? 1 : -1);
      return NPolynomial::monomial(t.f, w * inv_aut);
    }
    case NormalizationTag::invariant:
      break;
  }
  throw PreconditionError("the invariant tag has a symbolic alpha weight");
}

AlphaNPolynomial invariant_weight(const GraphCatalogEntry& entry) {
  const TopologyProfile& t = entry.topology;
  const int twice = 2 - t.sigma - t.chi;
  if (twice % 2 != 0) throw ConsistencyError("odd exponent in invariant weight");
  // (3 - s^-2 - s^2), (s^-1 - s) with s = alpha^(1/2)
  AlphaNPolynomial base = AlphaNPolynomial(3) - AlphaNPolynomial::monomial(-2, 0) -
                          AlphaNPolynomial::monomial(2, 0);
  AlphaNPolynomial twist = AlphaNPolynomial::monomial(-1, 0) - AlphaNPolynomial::monomial(1, 0);
  AlphaNPolynomial w = AlphaNPolynomial::monomial(t.chi, t.chi, ratio(2, entry.aut_moebius));
  for (int i = 0; i < twice / 2; ++i) w *= base;
  for (int i = 0; i < t.sigma; ++i) w *= twist;
  return w;
}

namespace {

template <class Coeff, class Weight>
Series<Coeff> sum_over(const std::vector<GraphCatalogEntry>& catalog, int max_degree,
                       Weight weight) {
  std::vector<Coeff> weights(catalog.size());
  parallel_for(catalog.size(), [&](std::size_t i) { weights[i] = weight(catalog[i]); });
  Series<Coeff> s(max_degree);
  for (std::size_t i = 0; i < catalog.size(); ++i)
    s.add_term(monomial_of(catalog[i].topology), weights[i]);
  return s;
}

}  // namespace

CouplingSeries expand_logZ(int beta, NormalizationTag tag, const ExpansionOptions& opts) {
  if (tag == NormalizationTag::invariant) {
    if (beta != 1 && beta != 2 && beta != 4)
      throw PreconditionError("beta must be 1, 2 or 4");
    return expand_logZ_invariant(ratio(beta, 2), opts);
  }
  auto catalog = connected_catalog(opts);
  return sum_over<NPolynomial>(catalog, opts.max_degree, [&](const GraphCatalogEntry& e) {
    return graph_weight(e, tag, beta);
  });
}

AlphaSeries expand_logZ_invariant(const ExpansionOptions& opts) {
  auto catalog = connected_catalog(opts);
  return sum_over<AlphaNPolynomial>(catalog, opts.max_degree, invariant_weight);
}

CouplingSeries expand_logZ_invariant(const BigRational& alpha, const ExpansionOptions& opts) {
  if (alpha <= 0) throw PreconditionError("alpha must be positive");
  AlphaSeries s = expand_logZ_invariant(opts);
  CouplingSeries out(opts.max_degree);
  for (const auto& [m, c] : s.terms()) out.add_term(m, c.at_alpha(alpha));
  return out;
}

CouplingSeries expand_Z(int beta, NormalizationTag tag, const ExpansionOptions& opts) {
  return exp(expand_logZ(beta, tag, opts));
}

AlphaSeries apply_duality(const AlphaSeries& s) {
  return s.map_coefficients([](const Monomial&, const AlphaNPolynomial& c) { return c.dual(); });
}

CouplingSeries apply_duality(const CouplingSeries& at_inverse_alpha, const BigRational& alpha) {
  return at_inverse_alpha.map_coefficients(
      [&](const Monomial&, const NPolynomial& c) { return c.scale_argument(-alpha); });
}

DualityReport verify_duality(const BigRational& alpha, const ExpansionOptions& opts,
                             bool throw_on_failure) {
  if (alpha <= 0) throw PreconditionError("alpha must be positive");
  DualityReport r;
  r.alpha = alpha;
  r.max_degree = opts.max_degree;
  r.graph_by_graph = true;
  for (const auto& e : connected_catalog(opts)) {
    ++r.graphs_checked;
    const AlphaNPolynomial w = invariant_weight(e);
    if (w.dual() != w) {
      r.graph_by_graph = false;
      if (throw_on_failure)
        throw VerificationFailure("duality fails for the graph with profile " +
                                  to_string(e.topology.v_profile) + ", chi " +
                                  std::to_string(e.topology.chi));
    }
  }
  const AlphaSeries sym = expand_logZ_invariant(opts);
  r.series_fixed = apply_duality(sym) == sym;
  if (!r.series_fixed && throw_on_failure)
    throw VerificationFailure("the symbolic series is not fixed by the duality");
  CouplingSeries at_inverse(opts.max_degree), at_alpha(opts.max_degree);
  for (const auto& [m, c] : sym.terms()) {
    at_inverse.add_term(m, c.at_alpha(1 / alpha));
    at_alpha.add_term(m, c.at_alpha(alpha));
  }
  const CouplingSeries mapped = apply_duality(at_inverse, alpha);
  r.numeric = mapped == at_alpha;
  if (!r.numeric && throw_on_failure) {
    for (const auto& [m, c] : at_alpha.terms())
      if (mapped.coeff(m) != c)
        throw VerificationFailure("duality at alpha " + to_string(alpha) + " fails at " +
                                  monomial_to_string(m) + ": " + to_string(mapped.coeff(m)) +
                                  " vs " + to_string(c));
    throw VerificationFailure("duality at alpha " + to_string(alpha) + " fails");
  }
  return r;
}

}  // namespace moebius
