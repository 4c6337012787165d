#pragma once

#include <cstdint>
#include <string>

#include "moebius/graph.hpp"

namespace moebius {

// A signed unit of the real, complex or quaternion algebra: sign * e_index,
// with e_0 = 1 and e_1, e_2, e_3 = i, j, k.
struct SignedUnit {
  int sign = 1;
  int index = 0;
  bool operator==(const SignedUnit&) const = default;
};

SignedUnit multiply(SignedUnit a, SignedUnit b);
SignedUnit conjugate(SignedUnit a);

// Signed count of unit assignments, one unit per edge. A vertex contributes
// the sign of the ordered product of its units (starting at the head of its
// rotation) when that product is real, else the assignment is dropped; each
// untwisted edge carrying an imaginary unit contributes an extra -1.
// Requires beta in {1,2,4} and beta^e within the assignment budget.
std::int64_t mu_bruteforce(const MoebiusGraph& g, int beta,
                           std::int64_t* contributing = nullptr);

// (-4+6b-b^2)^(1-sigma/2-chi/2) (2-b)^sigma b^(f-1), with 0^0 = 1.
std::int64_t mu_closed_form(const TopologyProfile& t, int beta);

struct MuReport {
  std::string graph_id;
  int beta = 0;
  std::int64_t mu_bruteforce = 0;
  std::int64_t mu_closed = 0;
  std::int64_t configurations_counted = 0;
};

MuReport mu_report(const MoebiusGraph& g, int beta, const std::string& id = "");

// Representative graph for the punctured surface with the given
// orientability, genus (1 - chi/2 or 1 - chi) and number of faces: a central
// vertex carrying n-1 tadpoles, the flowers, and for non-orientable surfaces
// one twisted tadpole (even genus) or twisted flower (odd genus). Every
// component hangs off the central vertex by a single stem.
MoebiusGraph standard_graph(int natural, int genus, int faces);

struct Irreducibles {
  std::int64_t tadpole = 0;
  std::int64_t flower = 0;
  std::int64_t twisted_tadpole = 0;
  std::int64_t twisted_flower = 0;
  bool operator==(const Irreducibles&) const = default;
};

// Brute-force values of the four one-component standard graphs.
Irreducibles calibrate_irreducibles(int beta);

namespace graphs {
// One 4-valent vertex with two loops; the surface is a Klein bottle.
MoebiusGraph klein();
}  // namespace graphs

}  // namespace moebius
