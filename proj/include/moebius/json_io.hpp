#pragma once

#include <json.hpp>

#include "moebius/clt.hpp"
#include "moebius/dual_char.hpp"
#include "moebius/enumerate.hpp"
#include "moebius/graph.hpp"
#include "moebius/npoly.hpp"
#include "moebius/oracle.hpp"
#include "moebius/penner.hpp"
#include "moebius/series.hpp"
#include "moebius/unit_sprinkle.hpp"

namespace moebius {

using json = nlohmann::ordered_json;

// Rationals are strings "p/q"; polynomials in N are {"exponent": "p/q"}.
json to_json(const BigRational& q);
BigRational rational_from_json(const json& j);

// {"rotations": [[h, ...], ...], "edges": [[h1, h2], ...], "twists": [bool, ...]}
json to_json(const MoebiusGraph& g);
// Throws StructuralError on schema violations.
MoebiusGraph graph_from_json(const json& j);

json to_json(const TopologyProfile& t);
json to_json(const NPolynomial& p);
NPolynomial npoly_from_json(const json& j);
// {"sqrt-alpha exponent": {"N exponent": "p/q"}}
json to_json(const AlphaNPolynomial& p);
AlphaNPolynomial alpha_npoly_from_json(const json& j);

// {"max_degree": D, "terms": [{"monomial": [j, ...], "coeff": {...}}, ...]}
json to_json(const CouplingSeries& s);
CouplingSeries coupling_series_from_json(const json& j);
json to_json(const AlphaSeries& s);
AlphaSeries alpha_series_from_json(const json& j);

// {"order": M, "coefficients": {"z exponent": {"N exponent": "p/q"}}}
json to_json(const ZSeries& s);
ZSeries zseries_from_json(const json& j);

// Canonical codes are binary; they are written as lowercase hex.
std::string hex_code(const CanonicalCode& code);
json to_json(const GraphCatalogEntry& e);
json to_json(const MuReport& r);
json to_json(const OracleReport& r);
json to_json(const McEstimate& m);
json to_json(const LambdaPolynomial& p);
json to_json(const IdentityReport& r);
json to_json(const CLTResult& r);
json to_json(const CLTReport& r);

}  // namespace moebius
