#include "moebius/unit_sprinkle.hpp"

#include <array>
#include <string>
#include <vector>

#include "moebius/config.hpp"
#include "moebius/errors.hpp"
#include "moebius/parallel.hpp"

namespace moebius {

SignedUnit multiply(SignedUnit a, SignedUnit b) {
  // products of imaginary units: row * column, i j k cyclic.
  static constexpr std::array<std::array<SignedUnit, 3>, 3> table{{
      {{{-1, 0}, {1, 3}, {-1, 2}}},
      {{{-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 2}, {-1, 1}, {-1, 0}}},
  }};
  const int sign = a.sign * b.sign;
  if (a.index == 0) return {sign, b.index};
  if (b.index == 0) return {sign, a.index};
  SignedUnit r = table[a.index - 1][b.index - 1];
  return {sign * r.sign, r.index};
}

SignedUnit conjugate(SignedUnit a) {
  return a.index == 0 ? a : SignedUnit{-a.sign, a.index};
}

namespace {

void check_beta(int beta) {
  if (beta != 1 && beta != 2 && beta != 4)
    throw PreconditionError("beta must be 1, 2 or 4, got " + std::to_string(beta));
}

std::int64_t int_pow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

std::int64_t mu_bruteforce(const MoebiusGraph& g, int beta, std::int64_t* contributing) {
  check_beta(beta);
  const int e = g.num_edges();
  const std::int64_t budget = budgets().mu_assignments;
  std::int64_t total = 1;
  for (int k = 0; k < e; ++k) {
    total *= beta;
    if (total > budget)
      throw ResourceError(std::to_string(beta) + "^" + std::to_string(e) +
                          " unit assignments exceed the budget of " +
                          std::to_string(budget));
  }
  if (e == 0) {
    if (contributing) *contributing = 1;
    return 1;
  }

  // Edge list per vertex in rotation order.
  std::vector<std::vector<int>> incident(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int h : g.rotations()[v]) incident[v].push_back(g.edge_of(h));

  const std::int64_t per_task = total / beta;
  std::vector<std::int64_t> sums(beta, 0), counts(beta, 0);
  parallel_for(beta, [&](std::size_t first) {
    std::vector<int> unit(e, 0);
    for (std::int64_t code = 0; code < per_task; ++code) {
      std::int64_t c = code;
      unit[0] = static_cast<int>(first);
      for (int k = 1; k < e; ++k) {
        unit[k] = static_cast<int>(c % beta);
        c /= beta;
      }
      int sign = 1;
      bool real = true;
      for (int v = 0; v < g.num_vertices() && real; ++v) {
        SignedUnit p;
        for (int k : incident[v]) p = multiply(p, {1, unit[k]});
        real = p.index == 0;
        sign *= p.sign;
      }
      if (!real) continue;
      for (int k = 0; k < e; ++k)
        if (unit[k] != 0 && !g.twisted(k)) sign = -sign;
      sums[first] += sign;
      ++counts[first];
    }
  });
  std::int64_t mu = 0, n = 0;
  for (int b = 0; b < beta; ++b) {
    mu += sums[b];
    n += counts[b];
  }
  if (contributing) *contributing = n;
  return mu;
}

std::int64_t mu_closed_form(const TopologyProfile& t, int beta) {
  check_beta(beta);
  const int twice = 2 - t.sigma - t.chi;
  if (twice % 2 != 0)
    throw ConsistencyError("1 - sigma/2 - chi/2 is not an integer (sigma=" +
                           std::to_string(t.sigma) + ", chi=" + std::to_string(t.chi) + ")");
  if (twice < 0 || t.f < 1)
    throw PreconditionError("closed form needs the profile of a connected graph");
  return int_pow(-4 + 6 * beta - beta * beta, twice / 2) * int_pow(2 - beta, t.sigma) *
         int_pow(beta, t.f - 1);
}

MuReport mu_report(const MoebiusGraph& g, int beta, const std::string& id) {
  MuReport r;
  r.graph_id = id;
  r.beta = beta;
  r.mu_bruteforce = mu_bruteforce(g, beta, &r.configurations_counted);
  r.mu_closed = mu_closed_form(topology(g), beta);
  return r;
}

namespace {

// Builder for graphs given as rotation lists of edge labels: each label
// appears exactly twice.
struct Builder {
  std::vector<std::vector<int>> edge_rotations;
  std::vector<bool> twists;

  int vertex() {
    edge_rotations.emplace_back();
    return static_cast<int>(edge_rotations.size()) - 1;
  }
  int edge(bool twisted = false) {
    twists.push_back(twisted);
    return static_cast<int>(twists.size()) - 1;
  }
  void attach(int v, int e) { edge_rotations[v].push_back(e); }

  MoebiusGraph build() const {
    std::vector<std::vector<int>> rotations;
    std::vector<std::array<int, 2>> edges(twists.size(), {-1, -1});
    int next = 0;
    for (const auto& rot : edge_rotations) {
      std::vector<int> r;
      for (int e : rot) {
        (edges[e][0] == -1 ? edges[e][0] : edges[e][1]) = next;
        r.push_back(next++);
      }
      rotations.push_back(std::move(r));
    }
    return MoebiusGraph(std::move(rotations), std::move(edges), twists);
  }
};

// A stem from `center` to a new vertex carrying one loop.
void add_tadpole(Builder& b, int center, bool twisted) {
  int stem = b.edge();
  b.attach(center, stem);
  int v = b.vertex();
  int loop = b.edge(twisted);
  b.attach(v, stem);
  b.attach(v, loop);
  b.attach(v, loop);
}

// A stem to a new vertex carrying two loops. Untwisted interleaved loops
// give a torus; nested loops, both twisted, give a Klein bottle.
void add_flower(Builder& b, int center, bool twisted) {
  int stem = b.edge();
  b.attach(center, stem);
  int v = b.vertex();
  int x = b.edge(twisted), y = b.edge(twisted);
  b.attach(v, stem);
  if (twisted) {
    for (int e : {x, x, y, y}) b.attach(v, e);
  } else {
    for (int e : {x, y, x, y}) b.attach(v, e);
  }
}

}  // namespace

MoebiusGraph standard_graph(int natural, int genus, int faces) {
  if (faces < 1 || genus < 0 || (natural != 1 && natural != -1))
    throw PreconditionError("standard graph needs faces >= 1, genus >= 0 and natural = +-1");
  Builder b;
  int center = b.vertex();
  for (int i = 0; i < faces - 1; ++i) add_tadpole(b, center, false);
  if (natural == 1) {
    for (int i = 0; i < genus; ++i) add_flower(b, center, false);
  } else {
    for (int i = 0; i < genus / 2; ++i) add_flower(b, center, false);
    if (genus % 2 == 0) add_tadpole(b, center, true);
    else add_flower(b, center, true);
  }
  if (b.edge_rotations[0].empty()) return graphs::single_edge();
  return b.build();
}

Irreducibles calibrate_irreducibles(int beta) {
  check_beta(beta);
  Irreducibles r;
  r.tadpole = mu_bruteforce(standard_graph(1, 0, 2), beta);
  r.flower = mu_bruteforce(standard_graph(1, 1, 1), beta);
  r.twisted_tadpole = mu_bruteforce(standard_graph(-1, 0, 1), beta);
  r.twisted_flower = mu_bruteforce(standard_graph(-1, 1, 1), beta);
  return r;
}

namespace graphs {

MoebiusGraph klein() { return figure_eight(false, true, true); }

}  // namespace graphs

}  // namespace moebius
