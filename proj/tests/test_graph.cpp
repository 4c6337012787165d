#include <doctest.h>

#include <numeric>
#include <random>

#include "moebius/enumerate.hpp"
#include "moebius/errors.hpp"
#include "moebius/graph.hpp"
#include "moebius/unit_sprinkle.hpp"

using namespace moebius;

namespace {

// Flag-model face count and orientability, written separately from the
// boundary-walk tracer. Flag 2h+s is side s of half-edge h.
struct FlagCounts {
  int faces = 0;
  bool orientable = true;
};

FlagCounts flag_counts(const MoebiusGraph& g) {
  int n = 2 * g.num_half_edges();
  auto s0 = [&](int x) {
    int h = x / 2, s = x % 2, m = g.mate(h);
    return g.twisted(g.edge_of(h)) ? 2 * m + s : 2 * m + (1 - s);
  };
  auto s1 = [&](int x) {
    int h = x / 2;
    return x % 2 == 1 ? 2 * g.succ(h) : 2 * g.pred(h) + 1;
  };
  auto s2 = [](int x) { return x ^ 1; };

  std::vector<int> seen(n, 0);
  FlagCounts out;
  for (int x = 0; x < n; ++x) {
    if (seen[x]) continue;
    ++out.faces;
    std::vector<int> stack{x};
    seen[x] = 1;
    while (!stack.empty()) {
      int y = stack.back();
      stack.pop_back();
      for (int z : {s0(y), s1(y)})
        if (!seen[z]) seen[z] = 1, stack.push_back(z);
    }
  }
  // Two-colour the flag graph under all three moves.
  std::vector<int> colour(n, -1);
  for (int x = 0; x < n; ++x) {
    if (colour[x] >= 0) continue;
    colour[x] = 0;
    std::vector<int> stack{x};
    while (!stack.empty()) {
      int y = stack.back();
      stack.pop_back();
      for (int z : {s0(y), s1(y), s2(y)}) {
        if (colour[z] < 0) {
          colour[z] = 1 - colour[y];
          stack.push_back(z);
        } else if (colour[z] == colour[y]) {
          out.orientable = false;
        }
      }
    }
  }
  return out;
}

MoebiusGraph fig1_graph() {
  auto t = graphs::theta();
  return MoebiusGraph(t.rotations(), t.edges(), {true, true, false});
}

}  // namespace

TEST_CASE("loops") {
  CHECK(trace_faces(graphs::loop(false)).size() == 2);
  CHECK(trace_faces(graphs::loop(true)).size() == 1);
  CHECK(orientability(graphs::loop(false)) == 1);
  CHECK(orientability(graphs::loop(true)) == -1);

  auto t = topology(graphs::loop(false));
  CHECK(t.v == 1);
  CHECK(t.e == 1);
  CHECK(t.f == 2);
  CHECK(t.chi == 2);
  CHECK(t.natural == 1);
  CHECK(t.sigma == 0);
  CHECK(t.genus == 0);

  auto tw = topology(graphs::loop(true));
  CHECK(tw.chi == 1);
  CHECK(tw.sigma == 1);
  // Genus of a non-orientable surface is 1 - chi; the crosscap count is 2 - chi.
  CHECK(tw.genus == 0);
  CHECK(tw.euler_genus == 1);
}

TEST_CASE("theta with two twisted edges has one face") {
  auto g = fig1_graph();
  CHECK(trace_faces(g).size() == 1);
  auto t = topology(g);
  CHECK(t.v == 2);
  CHECK(t.e == 3);
  CHECK(t.chi == 0);
}

TEST_CASE("klein graph") {
  auto t = topology(graphs::klein());
  CHECK(orientability(graphs::klein()) == -1);
  CHECK(t.chi == 0);
  CHECK(t.natural == -1);
  CHECK(t.sigma == 2);
  CHECK(t.euler_genus == 2);
  CHECK(t.genus == 1);
  CHECK(t.f == 1);
}

TEST_CASE("face lengths add up to 2e") {
  for (auto& e : enumerate_graphs({{3, 2}}))
    for (auto& f : trace_faces(e.graph)) CHECK(!f.empty());
  for (auto& e : enumerate_graphs({{3, 2}})) {
    std::size_t total = 0;
    for (auto& f : trace_faces(e.graph)) total += f.size();
    CHECK(total == 2u * e.graph.num_edges());
  }
}

TEST_CASE("tracer agrees with flag model on the e <= 4 catalog") {
  long checked = 0;
  for (auto& p : profiles_up_to(8))
    for (auto& e : enumerate_graphs(p, false)) {
      auto fc = flag_counts(e.graph);
      CHECK(e.topology.f == fc.faces);
      CHECK((e.topology.natural == 1) == fc.orientable);
      ++checked;
    }
  CHECK(checked > 500);
}

TEST_CASE("sigma from chi and orientability") {
  CHECK(sigma_of(2, 1) == 0);
  CHECK(sigma_of(1, -1) == 1);
  CHECK(sigma_of(0, -1) == 2);
  CHECK(sigma_of(-1, -1) == 1);
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(MoebiusGraph({{0, 1}}, {{0, 0}}, {false}), StructuralError);
  CHECK_THROWS_AS(MoebiusGraph({{0, 0}}, {{0, 1}}, {false}), StructuralError);
  CHECK_THROWS_AS(MoebiusGraph({{0}}, {{0, 1}}, {false}), StructuralError);
  CHECK_THROWS_AS(MoebiusGraph({{0, 1}}, {{0, 1}}, {}), StructuralError);
}

TEST_CASE("vertex flips") {
  auto loop = flip_vertex(graphs::loop(false), 0);
  CHECK_FALSE(loop.twisted(0));
  CHECK(topology(loop) == topology(graphs::loop(false)));

  auto th = flip_vertex(graphs::theta(), 0);
  for (int e = 0; e < 3; ++e) CHECK(th.twisted(e));
  auto t = topology(th);
  CHECK(t.chi == 2);
  CHECK(t.natural == 1);

  CHECK(canonical_code(th) == canonical_code(graphs::theta()));
}

TEST_CASE("topology is invariant under random flips") {
  std::mt19937 rng(7);
  for (auto& e : enumerate_graphs({{3, 2}, {1, 2}})) {
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<bool> flip(e.graph.num_vertices());
      for (std::size_t i = 0; i < flip.size(); ++i) flip[i] = rng() & 1;
      auto h = flip_vertices(e.graph, flip);
      CHECK(topology(h) == e.topology);
      CHECK(canonical_code(h) == e.code);
    }
  }
}

TEST_CASE("spanning forest untwisting") {
  auto g = flip_vertex(flip_vertex(graphs::dumbbell(), 1), 0);
  auto h = untwist_spanning_forest(g);
  for (int e = 0; e < h.num_edges(); ++e) CHECK_FALSE(h.twisted(e));
  auto k = untwist_spanning_forest(fig1_graph());
  CHECK(topology(k) == topology(fig1_graph()));
}

TEST_CASE("edge contraction") {
  auto th = contract_edge(graphs::theta(), 0);
  CHECK(th.num_vertices() == 1);
  CHECK(th.valence(0) == 4);
  CHECK(th.num_edges() == 2);
  for (int e = 0; e < 2; ++e) {
    CHECK(th.is_loop(e));
    CHECK_FALSE(th.twisted(e));
  }
  CHECK(topology(th).f == 3);

  auto se = contract_edge(graphs::single_edge(), 0);
  CHECK(se.num_vertices() == 1);
  CHECK(se.valence(0) == 0);
  CHECK(topology(se).f == 1);

  auto db = contract_edge(graphs::dumbbell(), 1);
  CHECK(db.num_vertices() == 1);
  CHECK(db.valence(0) == 4);
  CHECK(topology(db).chi == 2);
  CHECK(canonical_code(db) == canonical_code(graphs::figure_eight(false, false, false)));

  CHECK_THROWS_AS(contract_edge(graphs::loop(false), 0), PreconditionError);
  CHECK_THROWS_AS(contract_edge(flip_vertex(graphs::single_edge(), 0), 0),
                  PreconditionError);
}

TEST_CASE("contraction preserves the surface") {
  for (auto& p : profiles_up_to(8, 1))
    for (auto& e : enumerate_graphs(p))
      for (int ed = 0; ed < e.graph.num_edges(); ++ed) {
        if (e.graph.is_loop(ed) || e.graph.twisted(ed)) continue;
        auto t = topology(contract_edge(e.graph, ed));
        CHECK(t.chi == e.topology.chi);
        CHECK(t.natural == e.topology.natural);
        CHECK(t.f == e.topology.f);
      }
}

TEST_CASE("components") {
  CHECK(is_connected(graphs::theta()));
  auto two = disjoint_union({graphs::loop(false), graphs::loop(true)});
  CHECK(count_components(two) == 2);
  CHECK_FALSE(is_connected(two));
  CHECK(split_components(two).size() == 2);
}
