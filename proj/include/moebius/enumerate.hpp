#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "moebius/graph.hpp"
#include "moebius/npoly.hpp"

namespace moebius {

// j -> number of j-valent vertices.
using DegreeProfile = std::map<int, int>;

int half_edge_count(const DegreeProfile& p);
std::string to_string(const DegreeProfile& p);
// Parses "3:2,4:1".
DegreeProfile parse_profile(const std::string& text);
DegreeProfile profile_of(const MoebiusGraph& g);

// Möbius graphs are taken up to relabeling, rotation and vertex flips.
// Ribbon graphs are untwisted graphs taken up to relabeling and rotation
// only, so a ribbon graph and its mirror image may be distinct.
enum class Family { moebius, ribbon };

using CanonicalCode = std::string;

struct CanonicalForm {
  CanonicalCode code;
  long automorphisms = 0;
};

// For Family::ribbon the graph must be orientable; it is first normalized to
// zero twists keeping the first vertex of each component unflipped.
CanonicalForm canonical_form(const MoebiusGraph& g, Family family = Family::moebius);
CanonicalCode canonical_code(const MoebiusGraph& g, Family family = Family::moebius);
long automorphism_count(const MoebiusGraph& g, Family family = Family::moebius);
// Rebuilds the canonical representative of a connected graph's code.
MoebiusGraph graph_from_code(const CanonicalCode& code);

std::vector<MoebiusGraph> split_components(const MoebiusGraph& g);
MoebiusGraph disjoint_union(const std::vector<MoebiusGraph>& parts);

struct GraphCatalogEntry {
  MoebiusGraph graph;
  CanonicalCode code;
  long aut_moebius = 0;
  std::optional<long> aut_ribbon;  // only for orientable graphs
  TopologyProfile topology;
};

// One entry per isomorphism class with exactly this valence profile, sorted
// by canonical code. Throws ResourceError above the half-edge budget.
std::vector<GraphCatalogEntry> enumerate_graphs(const DegreeProfile& profile,
                                                bool connected_only = true,
                                                Family family = Family::moebius);

// Every profile with valences in [min_valence, max_valence] and an even
// number of half-edges between 2 and max_half_edges.
std::vector<DegreeProfile> profiles_up_to(int max_half_edges, int min_valence = 1,
                                          int max_valence = 0);

using WeightRule = std::function<NPolynomial(const MoebiusGraph&)>;

// Sum of weight(G) over all labeled gluings of the profile's half-edges (each
// with a twist bit for Family::moebius), divided by the order of the
// relabeling group: prod_j v_j! (2j)^v_j, or prod_j v_j! j^v_j for ribbons.
NPolynomial labeled_pairing_sum(const DegreeProfile& profile, const WeightRule& weight,
                                Family family = Family::moebius);

}  // namespace moebius
