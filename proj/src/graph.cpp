#include "moebius/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "moebius/errors.hpp"

namespace moebius {

MoebiusGraph::MoebiusGraph(std::vector<std::vector<int>> rotations,
                           std::vector<std::array<int, 2>> edges,
                           std::vector<bool> twists)
    : rotations_(std::move(rotations)),
      edges_(std::move(edges)),
      twists_(std::move(twists)) {
  if (twists_.size() != edges_.size())
    throw StructuralError("twist list has " + std::to_string(twists_.size()) +
                          " entries for " + std::to_string(edges_.size()) +
                          " edges");
  const int n = 2 * num_edges();
  mate_.assign(n, -1);
  edge_of_.assign(n, -1);
  vertex_of_.assign(n, -1);
  position_.assign(n, -1);
  for (int k = 0; k < num_edges(); ++k) {
    auto [a, b] = edges_[k];
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw StructuralError("edge " + std::to_string(k) +
                            " names a half-edge outside 0.." +
                            std::to_string(n - 1));
    if (a == b)
      throw StructuralError("edge " + std::to_string(k) +
                            " pairs half-edge " + std::to_string(a) +
                            " with itself");
    if (mate_[a] != -1 || mate_[b] != -1)
      throw StructuralError("edge pairing is not an involution: half-edge " +
                            std::to_string(mate_[a] != -1 ? a : b) +
                            " is paired twice");
    mate_[a] = b;
    mate_[b] = a;
    edge_of_[a] = edge_of_[b] = k;
  }
  for (int v = 0; v < num_vertices(); ++v) {
    for (int p = 0; p < valence(v); ++p) {
      int h = rotations_[v][p];
      if (h < 0 || h >= n)
        throw StructuralError("rotation of vertex " + std::to_string(v) +
                              " names unknown half-edge " + std::to_string(h));
      if (vertex_of_[h] != -1)
        throw StructuralError("half-edge " + std::to_string(h) +
                              " appears in more than one rotation slot");
      vertex_of_[h] = v;
      position_[h] = p;
    }
  }
  for (int h = 0; h < n; ++h)
    if (vertex_of_[h] == -1)
      throw StructuralError("half-edge " + std::to_string(h) +
                            " is missing from the rotations");
}

int MoebiusGraph::succ(int h) const {
  const auto& rot = rotations_[vertex_of_[h]];
  int p = position_[h] + 1;
  return rot[p == static_cast<int>(rot.size()) ? 0 : p];
}

int MoebiusGraph::pred(int h) const {
  const auto& rot = rotations_[vertex_of_[h]];
  int p = position_[h];
  return rot[p == 0 ? rot.size() - 1 : p - 1];
}

namespace {

// Flags are (half-edge, side) encoded as 2h + s. The three involutions of the
// generalized map: a2 swaps sides, a1 crosses a corner, a0 crosses an edge.
int alpha1(const MoebiusGraph& g, int x) {
  int h = x >> 1;
  return (x & 1) ? 2 * g.succ(h) : 2 * g.pred(h) + 1;
}

int alpha0(const MoebiusGraph& g, int x) {
  int h = x >> 1, s = x & 1;
  int m = g.mate(h);
  return g.twisted(g.edge_of(h)) ? 2 * m + s : 2 * m + (1 - s);
}

}  // namespace

std::vector<Face> trace_faces(const MoebiusGraph& g) {
  const int flags = 2 * g.num_half_edges();
  std::vector<char> seen(flags, 0);
  std::vector<Face> faces;
  for (int start = 0; start < flags; ++start) {
    if (seen[start]) continue;
    Face face;
    int x = start;
    do {
      int y = alpha0(g, x);
      seen[x] = seen[y] = 1;
      face.push_back({x >> 1, x & 1});
      x = alpha1(g, y);
    } while (x != start);
    faces.push_back(std::move(face));
  }
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.valence(v) == 0) faces.emplace_back();
  return faces;
}

int orientability(const MoebiusGraph& g) {
  std::vector<int> orient(g.num_vertices(), -1);
  for (int root = 0; root < g.num_vertices(); ++root) {
    if (orient[root] != -1) continue;
    orient[root] = 0;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int h : g.rotations()[u]) {
        int w = g.vertex_of(g.mate(h));
        int want = orient[u] ^ static_cast<int>(g.twisted(g.edge_of(h)));
        if (orient[w] == -1) {
          orient[w] = want;
          queue.push(w);
        } else if (orient[w] != want) {
          return -1;
        }
      }
    }
  }
  return 1;
}

int sigma_of(int chi, int natural) {
  if (natural == 1) return 0;
  return (chi % 2 != 0) ? 1 : 2;
}

TopologyProfile topology(const MoebiusGraph& g) {
  TopologyProfile t;
  t.v = g.num_vertices();
  t.e = g.num_edges();
  for (int v = 0; v < t.v; ++v) ++t.v_profile[g.valence(v)];
  for (const Face& face : trace_faces(g))
    ++t.f_profile[static_cast<int>(face.size())];
  t.f = 0;
  for (auto [j, n] : t.f_profile) t.f += n;
  t.chi = t.v - t.e + t.f;
  t.natural = orientability(g);
  t.sharp = (t.chi % 2 == 0) ? 1 : -1;
  t.sigma = sigma_of(t.chi, t.natural);
  t.genus = t.natural == 1 ? 1 - t.chi / 2 : 1 - t.chi;
  t.euler_genus = 2 - t.chi;
  return t;
}

int count_components(const MoebiusGraph& g) {
  std::vector<int> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = g.num_vertices();
  for (auto [a, b] : g.edges()) {
    int ra = find(g.vertex_of(a)), rb = find(g.vertex_of(b));
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components;
}

bool is_connected(const MoebiusGraph& g) {
  return g.num_vertices() > 0 && count_components(g) == 1;
}

MoebiusGraph flip_vertices(const MoebiusGraph& g, const std::vector<bool>& flip) {
  auto rotations = g.rotations();
  auto twists = g.twists();
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!flip[v]) continue;
    auto& rot = rotations[v];
    if (rot.size() > 1) std::reverse(rot.begin() + 1, rot.end());
  }
  for (int k = 0; k < g.num_edges(); ++k) {
    auto [a, b] = g.edges()[k];
    if (flip[g.vertex_of(a)] != flip[g.vertex_of(b)]) twists[k] = !twists[k];
  }
  return MoebiusGraph(std::move(rotations), g.edges(), std::move(twists));
}

MoebiusGraph flip_vertex(const MoebiusGraph& g, int vertex) {
  if (vertex < 0 || vertex >= g.num_vertices())
    throw PreconditionError("no vertex " + std::to_string(vertex));
  std::vector<bool> flip(g.num_vertices(), false);
  flip[vertex] = true;
  return flip_vertices(g, flip);
}

MoebiusGraph untwist_spanning_forest(const MoebiusGraph& g) {
  std::vector<int> orient(g.num_vertices(), -1);
  for (int root = 0; root < g.num_vertices(); ++root) {
    if (orient[root] != -1) continue;
    orient[root] = 0;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int h : g.rotations()[u]) {
        int w = g.vertex_of(g.mate(h));
        if (orient[w] != -1) continue;
        orient[w] = orient[u] ^ static_cast<int>(g.twisted(g.edge_of(h)));
        queue.push(w);
      }
    }
  }
  std::vector<bool> flip(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) flip[v] = orient[v] == 1;
  return flip_vertices(g, flip);
}

MoebiusGraph contract_edge(const MoebiusGraph& g, int edge) {
  if (edge < 0 || edge >= g.num_edges())
    throw PreconditionError("no edge " + std::to_string(edge));
  if (g.is_loop(edge))
    throw PreconditionError("edge " + std::to_string(edge) +
                            " is a loop and cannot be contracted");
  if (g.twisted(edge))
    throw PreconditionError("edge " + std::to_string(edge) +
                            " is twisted; flip an endpoint first");
  auto [a, b] = g.edges()[edge];
  const int u = g.vertex_of(a), w = g.vertex_of(b);

  // u: (a x1 .. xp), w: (b y1 .. yq)  ->  (x1 .. xp y1 .. yq)
  std::vector<int> merged;
  for (int k = 1; k < g.valence(u); ++k)
    merged.push_back(g.rotations()[u][(g.position(a) + k) % g.valence(u)]);
  for (int k = 1; k < g.valence(w); ++k)
    merged.push_back(g.rotations()[w][(g.position(b) + k) % g.valence(w)]);

  // Renumber half-edges, dropping a and b; edges after `edge` shift down.
  std::vector<int> renumber(g.num_half_edges(), -1);
  int next = 0;
  for (int h = 0; h < g.num_half_edges(); ++h)
    if (h != a && h != b) renumber[h] = next++;

  std::vector<std::vector<int>> rotations;
  const int keep = std::min(u, w);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (v == std::max(u, w)) continue;
    const auto& src = v == keep ? merged : g.rotations()[v];
    std::vector<int> rot;
    for (int h : src) rot.push_back(renumber[h]);
    rotations.push_back(std::move(rot));
  }
  std::vector<std::array<int, 2>> edges;
  std::vector<bool> twists;
  for (int k = 0; k < g.num_edges(); ++k) {
    if (k == edge) continue;
    edges.push_back({renumber[g.edges()[k][0]], renumber[g.edges()[k][1]]});
    twists.push_back(g.twisted(k));
  }
  return MoebiusGraph(std::move(rotations), std::move(edges), std::move(twists));
}

namespace graphs {

MoebiusGraph loop(bool twisted) {
  return MoebiusGraph({{0, 1}}, {{0, 1}}, {twisted});
}

MoebiusGraph theta() {
  return MoebiusGraph({{0, 1, 2}, {3, 4, 5}}, {{0, 3}, {1, 5}, {2, 4}},
                      {false, false, false});
}

MoebiusGraph dumbbell() {
  return MoebiusGraph({{0, 1, 2}, {3, 4, 5}}, {{0, 1}, {2, 3}, {4, 5}},
                      {false, false, false});
}

MoebiusGraph single_edge() { return MoebiusGraph({{0}, {1}}, {{0, 1}}, {false}); }

MoebiusGraph figure_eight(bool interleaved, bool twist_a, bool twist_b) {
  if (interleaved)
    return MoebiusGraph({{0, 1, 2, 3}}, {{0, 2}, {1, 3}}, {twist_a, twist_b});
  return MoebiusGraph({{0, 1, 2, 3}}, {{0, 1}, {2, 3}}, {twist_a, twist_b});
}

}  // namespace graphs

}  // namespace moebius
