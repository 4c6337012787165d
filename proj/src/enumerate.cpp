#include "moebius/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <sstream>
#include <tuple>

#include "moebius/config.hpp"
#include "moebius/errors.hpp"
#include "moebius/parallel.hpp"

namespace moebius {

int half_edge_count(const DegreeProfile& p) {
  int n = 0;
  for (auto [j, c] : p) n += j * c;
  return n;
}

std::string to_string(const DegreeProfile& p) {
  std::string out;
  for (auto [j, c] : p) {
    if (c == 0) continue;
    if (!out.empty()) out += ",";
    out += std::to_string(j) + ":" + std::to_string(c);
  }
  return out;
}

DegreeProfile parse_profile(const std::string& text) {
  DegreeProfile p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw UsageError("profile entry '" + item + "' is not of the form j:count");
    int j = 0, c = 0;
    try {
      std::size_t used = 0;
      j = std::stoi(item.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument(item);
      c = std::stoi(item.substr(colon + 1), &used);
      if (used != item.size() - colon - 1) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("profile entry '" + item + "' is not of the form j:count");
    }
    if (j < 1 || c < 0) throw UsageError("profile entry '" + item + "' out of range");
    if (c > 0) p[j] += c;
  }
  return p;
}

DegreeProfile profile_of(const MoebiusGraph& g) {
  DegreeProfile p;
  for (int v = 0; v < g.num_vertices(); ++v) ++p[g.valence(v)];
  return p;
}

namespace {

// Streams the code of the rooted traversal and compares it on the fly with
// the best code so far, giving up as soon as it is larger.
class CodeWriter {
 public:
  explicit CodeWriter(const std::string* best) : best_(best) {
    if (!best_ || best_->empty()) cmp_ = -1;
  }
  bool push(int value) {
    if (value > 255)
      throw ResourceError("graph too large for the canonical code encoding");
    const char c = static_cast<char>(value);
    if (cmp_ == 0) {
      const auto mine = static_cast<unsigned char>(c);
      const auto theirs = static_cast<unsigned char>((*best_)[out_.size()]);
      if (mine < theirs) cmp_ = -1;
      else if (mine > theirs) cmp_ = 1;
    }
    out_.push_back(c);
    return cmp_ <= 0;
  }
  int cmp() const { return cmp_; }
  std::string take() { return std::move(out_); }

 private:
  const std::string* best_;
  std::string out_;
  int cmp_ = 0;
};

// Traversal from half-edge h0 read in direction o0 (0: successor order,
// 1: predecessor order). Returns false if aborted against `best`.
bool rooted_code(const MoebiusGraph& g, int h0, int o0, CodeWriter& w) {
  const int nv = g.num_vertices();
  std::vector<int> label(nv, -1), orient(nv, 0), start(nv, 0), order;
  order.reserve(nv);
  const int u0 = g.vertex_of(h0);
  label[u0] = 0;
  orient[u0] = o0;
  start[u0] = h0;
  order.push_back(u0);
  if (!w.push(nv) || !w.push(g.num_edges())) return false;
  auto slot_of = [&](int vertex, int h) {
    const int val = g.valence(vertex);
    const int d = g.position(h) - g.position(start[vertex]);
    return orient[vertex] == 0 ? (d + val) % val : (val - d) % val;
  };
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    const int u = order[idx];
    const int val = g.valence(u);
    const auto& rot = g.rotations()[u];
    if (!w.push(val)) return false;
    const int p0 = g.position(start[u]);
    for (int k = 0; k < val; ++k) {
      const int h = orient[u] == 0 ? rot[(p0 + k) % val] : rot[(p0 - k + val) % val];
      const int m = g.mate(h);
      const int v = g.vertex_of(m);
      const int t = g.twisted(g.edge_of(h)) ? 1 : 0;
      if (label[v] == -1) {
        label[v] = static_cast<int>(order.size());
        orient[v] = orient[u] ^ t;
        start[v] = m;
        order.push_back(v);
      }
      if (!w.push(label[v]) || !w.push(slot_of(v, m)) ||
          !w.push(t ^ orient[u] ^ orient[v]))
        return false;
    }
  }
  return true;
}

CanonicalForm connected_form(const MoebiusGraph& g, Family family) {
  if (g.num_edges() == 0) {
    // A lone vertex of valence zero.
    return {std::string{char(1), char(0), char(0)}, 1};
  }
  CanonicalForm best;
  const int orientations = family == Family::moebius ? 2 : 1;
  for (int h = 0; h < g.num_half_edges(); ++h) {
    for (int o = 0; o < orientations; ++o) {
      CodeWriter w(best.code.empty() ? nullptr : &best.code);
      if (!rooted_code(g, h, o, w)) continue;
      if (w.cmp() < 0) {
        best.code = w.take();
        best.automorphisms = 1;
      } else {
        ++best.automorphisms;
      }
    }
  }
  return best;
}

MoebiusGraph ribbon_normalized(const MoebiusGraph& g) {
  MoebiusGraph n = untwist_spanning_forest(g);
  for (int k = 0; k < n.num_edges(); ++k)
    if (n.twisted(k))
      throw PreconditionError("ribbon mode requires an orientable graph");
  return n;
}

}  // namespace

std::vector<MoebiusGraph> split_components(const MoebiusGraph& g) {
  const int nv = g.num_vertices();
  std::vector<int> comp(nv, -1);
  int ncomp = 0;
  for (int r = 0; r < nv; ++r) {
    if (comp[r] != -1) continue;
    std::queue<int> q;
    q.push(r);
    comp[r] = ncomp;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int h : g.rotations()[u]) {
        int w = g.vertex_of(g.mate(h));
        if (comp[w] == -1) {
          comp[w] = ncomp;
          q.push(w);
        }
      }
    }
    ++ncomp;
  }
  std::vector<MoebiusGraph> parts;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> renumber(g.num_half_edges(), -1);
    std::vector<std::vector<int>> rotations;
    int next = 0;
    for (int v = 0; v < nv; ++v) {
      if (comp[v] != c) continue;
      std::vector<int> rot;
      for (int h : g.rotations()[v]) {
        renumber[h] = next++;
        rot.push_back(renumber[h]);
      }
      rotations.push_back(std::move(rot));
    }
    std::vector<std::array<int, 2>> edges;
    std::vector<bool> twists;
    for (int k = 0; k < g.num_edges(); ++k) {
      auto [a, b] = g.edges()[k];
      if (comp[g.vertex_of(a)] != c) continue;
      edges.push_back({renumber[a], renumber[b]});
      twists.push_back(g.twisted(k));
    }
    parts.emplace_back(std::move(rotations), std::move(edges), std::move(twists));
  }
  return parts;
}

MoebiusGraph disjoint_union(const std::vector<MoebiusGraph>& parts) {
  std::vector<std::vector<int>> rotations;
  std::vector<std::array<int, 2>> edges;
  std::vector<bool> twists;
  int offset = 0;
  for (const auto& g : parts) {
    for (const auto& rot : g.rotations()) {
      std::vector<int> r;
      for (int h : rot) r.push_back(h + offset);
      rotations.push_back(std::move(r));
    }
    for (int k = 0; k < g.num_edges(); ++k) {
      edges.push_back({g.edges()[k][0] + offset, g.edges()[k][1] + offset});
      twists.push_back(g.twisted(k));
    }
    offset += g.num_half_edges();
  }
  return MoebiusGraph(std::move(rotations), std::move(edges), std::move(twists));
}

CanonicalForm canonical_form(const MoebiusGraph& g, Family family) {
  if (g.num_vertices() == 0) return {std::string(), 1};
  const MoebiusGraph& src = g;
  MoebiusGraph normalized;
  const MoebiusGraph* work = &src;
  if (family == Family::ribbon) {
    normalized = ribbon_normalized(g);
    work = &normalized;
  }
  if (is_connected(*work)) return connected_form(*work, family);

  // Disconnected: sorted component codes, each with a two-byte length, after
  // a leading zero byte (connected codes start with v >= 1).
  std::vector<CanonicalForm> forms;
  for (const auto& part : split_components(*work))
    forms.push_back(connected_form(part, family));
  std::sort(forms.begin(), forms.end(),
            [](const auto& a, const auto& b) { return a.code < b.code; });
  CanonicalForm out;
  out.code.push_back(char(0));
  out.automorphisms = 1;
  std::size_t run = 0;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const auto& c = forms[i].code;
    out.code.push_back(static_cast<char>(c.size() >> 8));
    out.code.push_back(static_cast<char>(c.size() & 0xff));
    out.code += c;
    out.automorphisms *= forms[i].automorphisms;
    run = (i > 0 && forms[i - 1].code == c) ? run + 1 : 1;
    out.automorphisms *= static_cast<long>(run);
  }
  return out;
}

CanonicalCode canonical_code(const MoebiusGraph& g, Family family) {
  return canonical_form(g, family).code;
}

long automorphism_count(const MoebiusGraph& g, Family family) {
  return canonical_form(g, family).automorphisms;
}

namespace {

MoebiusGraph connected_from_code(const std::string& code, std::size_t& at) {
  auto next = [&]() -> int {
    if (at >= code.size()) throw StructuralError("truncated canonical code");
    return static_cast<unsigned char>(code[at++]);
  };
  const int nv = next();
  const int ne = next();
  std::vector<int> offset(nv + 1, 0);
  std::vector<std::vector<std::array<int, 3>>> slots(nv);
  for (int u = 0; u < nv; ++u) {
    const int val = next();
    for (int k = 0; k < val; ++k) {
      int w = next(), p = next(), t = next();
      slots[u].push_back({w, p, t});
    }
    offset[u + 1] = offset[u] + val;
  }
  if (offset[nv] != 2 * ne) throw StructuralError("inconsistent canonical code");
  std::vector<std::vector<int>> rotations(nv);
  std::vector<std::array<int, 2>> edges;
  std::vector<bool> twists;
  for (int u = 0; u < nv; ++u) {
    for (int k = 0; k < static_cast<int>(slots[u].size()); ++k) {
      const int h = offset[u] + k;
      rotations[u].push_back(h);
      auto [w, p, t] = slots[u][k];
      if (w >= nv) throw StructuralError("inconsistent canonical code");
      const int m = offset[w] + p;
      if (h < m) {
        edges.push_back({h, m});
        twists.push_back(t != 0);
      }
    }
  }
  return MoebiusGraph(std::move(rotations), std::move(edges), std::move(twists));
}

}  // namespace

MoebiusGraph graph_from_code(const CanonicalCode& code) {
  if (code.empty()) return MoebiusGraph();
  std::size_t at = 0;
  if (code[0] != 0) return connected_from_code(code, at);
  std::vector<MoebiusGraph> parts;
  at = 1;
  while (at < code.size()) {
    if (at + 2 > code.size()) throw StructuralError("truncated canonical code");
    std::size_t len = (static_cast<unsigned char>(code[at]) << 8) |
                      static_cast<unsigned char>(code[at + 1]);
    at += 2;
    std::size_t sub = 0;
    parts.push_back(connected_from_code(code.substr(at, len), sub));
    at += len;
  }
  return disjoint_union(parts);
}

namespace {

void check_profile(const DegreeProfile& profile) {
  int vertices = 0;
  for (auto [j, c] : profile) {
    if (j < 1 || c < 0)
      throw PreconditionError("invalid valence profile " + to_string(profile));
    vertices += c;
  }
  if (vertices == 0) throw PreconditionError("valence profile has no vertices");
  const int n = half_edge_count(profile);
  if (n % 2 != 0)
    throw PreconditionError("profile " + to_string(profile) +
                            " has an odd number of half-edges");
  const int budget = budgets().half_edges;
  if (n > budget)
    throw ResourceError("profile " + to_string(profile) + " has " + std::to_string(n) +
                        " half-edges, over the budget of " + std::to_string(budget));
}

// Vertices in ascending valence, half-edges numbered consecutively.
std::vector<std::vector<int>> base_rotations(const DegreeProfile& profile) {
  std::vector<std::vector<int>> rotations;
  int next = 0;
  for (auto [j, c] : profile)
    for (int i = 0; i < c; ++i) {
      std::vector<int> rot(j);
      std::iota(rot.begin(), rot.end(), next);
      next += j;
      rotations.push_back(std::move(rot));
    }
  return rotations;
}

// Calls visit(mate) for every perfect matching whose first pair is
// (0, first_partner).
template <class F>
void matchings_from(int n, int first_partner, F&& visit) {
  std::vector<int> mate(n, -1);
  mate[0] = first_partner;
  mate[first_partner] = 0;
  auto rec = [&](auto&& self) -> void {
    int a = 0;
    while (a < n && mate[a] != -1) ++a;
    if (a == n) {
      visit(mate);
      return;
    }
    for (int b = a + 1; b < n; ++b) {
      if (mate[b] != -1) continue;
      mate[a] = b;
      mate[b] = a;
      self(self);
      mate[a] = mate[b] = -1;
    }
  };
  rec(rec);
}

std::vector<std::array<int, 2>> edges_of(const std::vector<int>& mate) {
  std::vector<std::array<int, 2>> edges;
  for (int h = 0; h < static_cast<int>(mate.size()); ++h)
    if (h < mate[h]) edges.push_back({h, mate[h]});
  return edges;
}

struct Gluing {
  std::vector<std::array<int, 2>> edges;
  std::vector<int> tree_edges;   // untwisted in every representative
  std::vector<int> cotree_edges;
  bool connected = false;
};

Gluing analyse(const std::vector<int>& vertex_of, int nv,
               std::vector<std::array<int, 2>> edges) {
  Gluing gl;
  gl.edges = std::move(edges);
  std::vector<std::vector<std::pair<int, int>>> adj(nv);
  for (int k = 0; k < static_cast<int>(gl.edges.size()); ++k) {
    int u = vertex_of[gl.edges[k][0]], w = vertex_of[gl.edges[k][1]];
    adj[u].push_back({w, k});
    adj[w].push_back({u, k});
  }
  std::vector<char> seen(nv, 0), tree(gl.edges.size(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (auto [w, k] : adj[u]) {
      if (seen[w]) continue;
      seen[w] = 1;
      tree[k] = 1;
      ++reached;
      q.push(w);
    }
  }
  gl.connected = reached == nv;
  for (int k = 0; k < static_cast<int>(gl.edges.size()); ++k)
    (tree[k] ? gl.tree_edges : gl.cotree_edges).push_back(k);
  return gl;
}

GraphCatalogEntry make_entry(const CanonicalCode& code, Family family, long aut) {
  GraphCatalogEntry e;
  e.code = code;
  e.graph = graph_from_code(code);
  e.topology = topology(e.graph);
  if (family == Family::moebius) {
    e.aut_moebius = aut;
    if (e.topology.natural == 1) e.aut_ribbon = automorphism_count(e.graph, Family::ribbon);
  } else {
    e.aut_ribbon = aut;
    e.aut_moebius = automorphism_count(e.graph, Family::moebius);
  }
  return e;
}

std::vector<GraphCatalogEntry> enumerate_connected(const DegreeProfile& profile,
                                                   Family family) {
  const auto rotations = base_rotations(profile);
  const int nv = static_cast<int>(rotations.size());
  const int n = half_edge_count(profile);
  std::vector<int> vertex_of(n);
  for (int v = 0; v < nv; ++v)
    for (int h : rotations[v]) vertex_of[h] = v;

  std::vector<std::map<CanonicalCode, long>> found(n > 0 ? n - 1 : 0);
  parallel_for(found.size(), [&](std::size_t task) {
    auto& local = found[task];
    matchings_from(n, static_cast<int>(task) + 1, [&](const std::vector<int>& mate) {
      Gluing gl = analyse(vertex_of, nv, edges_of(mate));
      if (!gl.connected) return;
      const int free_edges = family == Family::moebius
                                 ? static_cast<int>(gl.cotree_edges.size())
                                 : 0;
      for (long mask = 0; mask < (1L << free_edges); ++mask) {
        std::vector<bool> twists(gl.edges.size(), false);
        for (int i = 0; i < free_edges; ++i)
          twists[gl.cotree_edges[i]] = (mask >> i) & 1;
        MoebiusGraph g(rotations, gl.edges, std::move(twists));
        CanonicalForm form = connected_form(g, family);
        local.try_emplace(std::move(form.code), form.automorphisms);
      }
    });
  });
  std::map<CanonicalCode, long> merged;
  for (auto& m : found) merged.insert(m.begin(), m.end());
  std::vector<GraphCatalogEntry> out;
  for (const auto& [code, aut] : merged) out.push_back(make_entry(code, family, aut));
  return out;
}

std::vector<DegreeProfile> sub_profiles(const DegreeProfile& p) {
  std::vector<std::pair<int, int>> items(p.begin(), p.end());
  std::vector<DegreeProfile> out;
  DegreeProfile cur;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == items.size()) {
      if (!cur.empty() && half_edge_count(cur) % 2 == 0) out.push_back(cur);
      return;
    }
    for (int c = 0; c <= items[i].second; ++c) {
      if (c > 0) cur[items[i].first] = c;
      self(self, i + 1);
    }
    cur.erase(items[i].first);
  };
  rec(rec, 0);
  return out;
}

std::mutex cache_mutex;
std::map<std::tuple<DegreeProfile, Family, bool>, std::vector<GraphCatalogEntry>> cache;

std::vector<GraphCatalogEntry> enumerate_disconnected(const DegreeProfile& profile,
                                                      Family family) {
  // Connected building blocks from every sub-profile, in a fixed order.
  struct Block {
    DegreeProfile profile;
    const GraphCatalogEntry* entry;
  };
  std::vector<std::vector<GraphCatalogEntry>> catalogs;
  std::vector<DegreeProfile> subs = sub_profiles(profile);
  for (const auto& s : subs) catalogs.push_back(enumerate_graphs(s, true, family));
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (const auto& e : catalogs[i]) blocks.push_back({subs[i], &e});

  std::vector<GraphCatalogEntry> out;
  std::vector<int> chosen;
  DegreeProfile remaining = profile;
  auto fits = [&](const DegreeProfile& p) {
    for (auto [j, c] : p) {
      auto it = remaining.find(j);
      if (it == remaining.end() || it->second < c) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t from) -> void {
    bool empty = std::all_of(remaining.begin(), remaining.end(),
                             [](const auto& kv) { return kv.second == 0; });
    if (empty) {
      std::vector<MoebiusGraph> parts;
      for (int b : chosen) parts.push_back(blocks[b].entry->graph);
      MoebiusGraph g = disjoint_union(parts);
      CanonicalForm form = canonical_form(g, family);
      out.push_back(make_entry(form.code, family, form.automorphisms));
      return;
    }
    for (std::size_t b = from; b < blocks.size(); ++b) {
      if (!fits(blocks[b].profile)) continue;
      for (auto [j, c] : blocks[b].profile) remaining[j] -= c;
      chosen.push_back(static_cast<int>(b));
      self(self, b);
      chosen.pop_back();
      for (auto [j, c] : blocks[b].profile) remaining[j] += c;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.code < b.code; });
  return out;
}

}  // namespace

std::vector<GraphCatalogEntry> enumerate_graphs(const DegreeProfile& input,
                                                bool connected_only, Family family) {
  DegreeProfile profile;
  for (auto [j, c] : input)
    if (c != 0) profile[j] = c;
  check_profile(profile);
  auto key = std::make_tuple(profile, family, connected_only);
  {
    std::lock_guard lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::vector<GraphCatalogEntry> result =
      connected_only ? enumerate_connected(profile, family)
                     : enumerate_disconnected(profile, family);
  std::lock_guard lock(cache_mutex);
  return cache.try_emplace(key, std::move(result)).first->second;
}

std::vector<DegreeProfile> profiles_up_to(int max_half_edges, int min_valence,
                                          int max_valence) {
  if (max_valence <= 0 || max_valence > max_half_edges) max_valence = max_half_edges;
  min_valence = std::max(min_valence, 1);
  std::vector<DegreeProfile> out;
  DegreeProfile cur;
  auto rec = [&](auto&& self, int j, int used) -> void {
    if (j > max_valence) {
      if (used > 0 && used % 2 == 0) out.push_back(cur);
      return;
    }
    for (int c = 0; used + c * j <= max_half_edges; ++c) {
      if (c > 0) cur[j] = c;
      self(self, j + 1, used + c * j);
    }
    cur.erase(j);
  };
  rec(rec, min_valence, 0);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return half_edge_count(a) < half_edge_count(b);
  });
  return out;
}

NPolynomial labeled_pairing_sum(const DegreeProfile& input, const WeightRule& weight,
                                Family family) {
  DegreeProfile profile;
  for (auto [j, c] : input)
    if (c != 0) profile[j] = c;
  check_profile(profile);
  const auto rotations = base_rotations(profile);
  const int n = half_edge_count(profile);
  std::vector<NPolynomial> partial(n - 1);
  parallel_for(partial.size(), [&](std::size_t task) {
    matchings_from(n, static_cast<int>(task) + 1, [&](const std::vector<int>& mate) {
      auto edges = edges_of(mate);
      const int e = static_cast<int>(edges.size());
      const long states = family == Family::moebius ? (1L << e) : 1;
      for (long mask = 0; mask < states; ++mask) {
        std::vector<bool> twists(e);
        for (int k = 0; k < e; ++k) twists[k] = (mask >> k) & 1;
        partial[task] += weight(MoebiusGraph(rotations, edges, std::move(twists)));
      }
    });
  });
  NPolynomial total;
  for (const auto& p : partial) total += p;
  BigInt group = 1;
  for (auto [j, c] : profile) {
    group *= factorial(static_cast<unsigned>(c));
    group *= pow(BigInt(family == Family::moebius ? 2 * j : j), static_cast<unsigned>(c));
  }
  return total * BigRational(BigInt(1), group);
}

}  // namespace moebius
