#pragma once

#include <array>
#include <map>
#include <vector>

namespace moebius {

// Signed rotation system. Half-edges are 0..2e-1; each vertex lists its
// half-edges in cyclic order; each edge pairs two half-edges and carries a
// twist bit.
class MoebiusGraph {
 public:
  MoebiusGraph() = default;
  // Validates the data and throws StructuralError if it does not describe a
  // graph (bad pairing, half-edge missing or repeated, size mismatch).
  MoebiusGraph(std::vector<std::vector<int>> rotations,
               std::vector<std::array<int, 2>> edges, std::vector<bool> twists);

  int num_vertices() const { return static_cast<int>(rotations_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_half_edges() const { return 2 * num_edges(); }

  const std::vector<std::vector<int>>& rotations() const { return rotations_; }
  const std::vector<std::array<int, 2>>& edges() const { return edges_; }
  const std::vector<bool>& twists() const { return twists_; }

  int valence(int vertex) const {
    return static_cast<int>(rotations_[vertex].size());
  }
  int mate(int h) const { return mate_[h]; }
  int edge_of(int h) const { return edge_of_[h]; }
  int vertex_of(int h) const { return vertex_of_[h]; }
  int position(int h) const { return position_[h]; }
  int succ(int h) const;
  int pred(int h) const;
  bool twisted(int edge) const { return twists_[edge]; }
  bool is_loop(int edge) const {
    return vertex_of_[edges_[edge][0]] == vertex_of_[edges_[edge][1]];
  }

  bool operator==(const MoebiusGraph& other) const {
    return rotations_ == other.rotations_ && edges_ == other.edges_ &&
           twists_ == other.twists_;
  }

 private:
  std::vector<std::vector<int>> rotations_;
  std::vector<std::array<int, 2>> edges_;
  std::vector<bool> twists_;
  std::vector<int> mate_, edge_of_, vertex_of_, position_;
};

// One side of an edge, named by a half-edge of the edge and a side bit.
// Side 1 of h faces the rotation successor of h, side 0 the predecessor.
struct EdgeSide {
  int half_edge;
  int side;
  bool operator==(const EdgeSide&) const = default;
};

// A boundary walk; its length is the number of sides of the polygon.
using Face = std::vector<EdgeSide>;

std::vector<Face> trace_faces(const MoebiusGraph& g);

// +1 orientable, -1 non-orientable.
int orientability(const MoebiusGraph& g);

struct TopologyProfile {
  int v = 0;
  int e = 0;
  int f = 0;
  std::map<int, int> v_profile;
  std::map<int, int> f_profile;
  int chi = 0;
  int natural = 1;
  int sharp = 1;
  int sigma = 0;
  // 1 - chi/2 for orientable surfaces, 1 - chi otherwise.
  int genus = 0;
  // 2 - chi: number of handles doubled, or number of crosscaps.
  int euler_genus = 0;

  bool operator==(const TopologyProfile&) const = default;
};

TopologyProfile topology(const MoebiusGraph& g);
// Sigma, genus and sharp from (chi, natural).
int sigma_of(int chi, int natural);

int count_components(const MoebiusGraph& g);
bool is_connected(const MoebiusGraph& g);

MoebiusGraph flip_vertex(const MoebiusGraph& g, int vertex);
// Flips every vertex in the set; returns the graph with all twists adjusted.
MoebiusGraph flip_vertices(const MoebiusGraph& g, const std::vector<bool>& flip);
// Flips vertices so that every edge of a breadth-first spanning forest is
// untwisted. An orientable graph comes out with no twisted edges.
MoebiusGraph untwist_spanning_forest(const MoebiusGraph& g);

MoebiusGraph contract_edge(const MoebiusGraph& g, int edge);

// Small named graphs used throughout the tests and the CLI.
namespace graphs {
MoebiusGraph loop(bool twisted);
MoebiusGraph theta();
MoebiusGraph dumbbell();
MoebiusGraph single_edge();
// One 4-valent vertex, two loops. interleaved: rotation (a b a' b');
// otherwise nested (a a' b b').
MoebiusGraph figure_eight(bool interleaved, bool twist_a, bool twist_b);
}  // namespace graphs

}  // namespace moebius
