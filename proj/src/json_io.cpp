#include "moebius/json_io.hpp"

#include <cstdio>

#include "moebius/errors.hpp"

namespace moebius {

json to_json(const BigRational& q) { return to_string(q); }

BigRational rational_from_json(const json& j) {
  if (!j.is_string()) throw StructuralError("expected a rational string \"p/q\"");
  return parse_rational(j.get<std::string>());
}

namespace {

int int_key(const std::string& key) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(key, &used);
    if (used == key.size()) return v;
  } catch (const std::exception&) {
  }
  throw StructuralError("expected an integer key, got '" + key + "'");
}

void require(bool ok, const std::string& what) {
  if (!ok) throw StructuralError(what);
}

json profile_json(const std::map<int, int>& p) {
  json j = json::object();
  for (auto [k, c] : p) j[std::to_string(k)] = c;
  return j;
}

}  // namespace

json to_json(const MoebiusGraph& g) {
  json j;
  j["rotations"] = g.rotations();
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e[0], e[1]});
  j["edges"] = edges;
  json twists = json::array();
  for (bool t : g.twists()) twists.push_back(t);
  j["twists"] = twists;
  return j;
}

MoebiusGraph graph_from_json(const json& j) {
  require(j.is_object(), "graph must be a JSON object");
  for (const char* key : {"rotations", "edges", "twists"})
    require(j.contains(key) && j.at(key).is_array(), std::string("graph needs an array '") + key + "'");
  std::vector<std::vector<int>> rotations;
  for (const auto& r : j.at("rotations")) {
    require(r.is_array(), "each rotation must be an array of half-edges");
    std::vector<int> rot;
    for (const auto& h : r) {
      require(h.is_number_integer(), "half-edges must be integers");
      rot.push_back(h.get<int>());
    }
    rotations.push_back(std::move(rot));
  }
  std::vector<std::array<int, 2>> edges;
  for (const auto& e : j.at("edges")) {
    require(e.is_array() && e.size() == 2 && e[0].is_number_integer() && e[1].is_number_integer(),
            "each edge must be a pair of half-edges");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  std::vector<bool> twists;
  for (const auto& t : j.at("twists")) {
    require(t.is_boolean(), "twists must be booleans");
    twists.push_back(t.get<bool>());
  }
  return MoebiusGraph(std::move(rotations), std::move(edges), std::move(twists));
}

json to_json(const TopologyProfile& t) {
  json j;
  j["v"] = t.v;
  j["e"] = t.e;
  j["f"] = t.f;
  j["chi"] = t.chi;
  j["natural"] = t.natural;
  j["sharp"] = t.sharp;
  j["sigma"] = t.sigma;
  j["genus"] = t.genus;
  j["euler_genus"] = t.euler_genus;
  j["v_profile"] = profile_json(t.v_profile);
  j["f_profile"] = profile_json(t.f_profile);
  return j;
}

json to_json(const NPolynomial& p) {
  json j = json::object();
  for (const auto& [k, c] : p.terms()) j[std::to_string(k)] = to_string(c);
  return j;
}

NPolynomial npoly_from_json(const json& j) {
  require(j.is_object(), "polynomial in N must be an object");
  NPolynomial p;
  for (const auto& [k, c] : j.items()) p.add_term(int_key(k), rational_from_json(c));
  return p;
}

json to_json(const AlphaNPolynomial& p) {
  json j = json::object();
  for (const auto& [key, c] : p.terms()) j[std::to_string(key.first)][std::to_string(key.second)] = to_string(c);
  return j;
}

AlphaNPolynomial alpha_npoly_from_json(const json& j) {
  require(j.is_object(), "alpha polynomial must be an object");
  AlphaNPolynomial p;
  for (const auto& [s, inner] : j.items()) {
    require(inner.is_object(), "alpha polynomial entries must be objects");
    for (const auto& [n, c] : inner.items()) p.add_term(int_key(s), int_key(n), rational_from_json(c));
  }
  return p;
}

namespace {

template <class Coeff, class ToJson>
json series_json(const Series<Coeff>& s, ToJson to) {
  json j;
  j["max_degree"] = s.max_degree();
  json terms = json::array();
  for (const auto& [m, c] : s.terms()) {
    json t;
    t["monomial"] = m;
    t["coeff"] = to(c);
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

template <class Coeff, class FromJson>
Series<Coeff> series_from(const json& j, FromJson from) {
  require(j.is_object() && j.contains("max_degree") && j.at("max_degree").is_number_integer() &&
              j.contains("terms") && j.at("terms").is_array(),
          "series needs 'max_degree' and 'terms'");
  Series<Coeff> s(j.at("max_degree").get<int>());
  for (const auto& t : j.at("terms")) {
    require(t.is_object() && t.contains("monomial") && t.contains("coeff") &&
                t.at("monomial").is_array(),
            "series term needs 'monomial' and 'coeff'");
    Monomial m;
    for (const auto& x : t.at("monomial")) {
      require(x.is_number_integer() && x.get<int>() >= 1, "monomial entries must be positive integers");
      m.push_back(x.get<int>());
    }
    if (weighted_degree(m) > s.max_degree())
      throw StructuralError("term " + monomial_to_string(m) + " exceeds max_degree");
    s.add_term(m, from(t.at("coeff")));
  }
  return s;
}

}  // namespace

json to_json(const CouplingSeries& s) {
  return series_json(s, [](const NPolynomial& c) { return to_json(c); });
}

CouplingSeries coupling_series_from_json(const json& j) {
  return series_from<NPolynomial>(j, npoly_from_json);
}

json to_json(const AlphaSeries& s) {
  return series_json(s, [](const AlphaNPolynomial& c) { return to_json(c); });
}

AlphaSeries alpha_series_from_json(const json& j) {
  return series_from<AlphaNPolynomial>(j, alpha_npoly_from_json);
}

json to_json(const ZSeries& s) {
  json j;
  j["order"] = s.order();
  json c = json::object();
  for (const auto& [k, p] : s.terms()) c[std::to_string(k)] = to_json(p);
  j["coefficients"] = c;
  return j;
}

ZSeries zseries_from_json(const json& j) {
  require(j.is_object() && j.contains("order") && j.at("order").is_number_integer() &&
              j.contains("coefficients") && j.at("coefficients").is_object(),
          "z-series needs 'order' and 'coefficients'");
  ZSeries s(j.at("order").get<int>());
  for (const auto& [k, p] : j.at("coefficients").items()) {
    const int e = int_key(k);
    require(e >= 0 && e <= s.order(), "z exponent out of range");
    s.add_term(e, npoly_from_json(p));
  }
  return s;
}

std::string hex_code(const CanonicalCode& code) {
  std::string out;
  char buf[3];
  for (unsigned char c : code) {
    std::snprintf(buf, sizeof buf, "%02x", c);
    out += buf;
  }
  return out;
}

json to_json(const GraphCatalogEntry& e) {
  json j;
  j["code"] = hex_code(e.code);
  j["graph"] = to_json(e.graph);
  j["topology"] = to_json(e.topology);
  j["aut_moebius"] = e.aut_moebius;
  j["aut_ribbon"] = e.aut_ribbon ? json(*e.aut_ribbon) : json(nullptr);
  return j;
}

json to_json(const MuReport& r) {
  json j;
  j["graph_id"] = r.graph_id;
  j["beta"] = r.beta;
  j["mu_bruteforce"] = r.mu_bruteforce;
  j["mu_closed"] = r.mu_closed;
  j["configurations_counted"] = r.configurations_counted;
  j["equal"] = r.mu_bruteforce == r.mu_closed;
  return j;
}

json to_json(const OracleReport& r) {
  json j;
  j["beta"] = r.beta;
  j["n"] = r.n;
  j["monomial"] = r.monomial;
  j["exact"] = to_string(r.exact);
  j["predicted"] = to_string(r.predicted);
  j["equal"] = r.equal;
  return j;
}

json to_json(const McEstimate& m) {
  json j;
  j["mean"] = m.mean;
  j["standard_error"] = m.standard_error;
  j["samples"] = m.samples;
  return j;
}

json to_json(const LambdaPolynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p) terms.push_back({{"exponents", e}, {"coeff", to_string(c)}});
  return terms;
}

json to_json(const IdentityReport& r) {
  json j;
  j["which"] = to_string(r.which);
  j["N"] = r.n;
  j["k"] = r.k;
  j["lhs"] = to_json(r.lhs);
  j["rhs"] = to_json(r.rhs);
  j["equal"] = r.equal;
  return j;
}

json to_json(const CLTResult& r) {
  json j;
  j["alpha"] = to_string(r.alpha);
  j["j_max"] = r.j_max;
  json c = json::array();
  for (const auto& [key, v] : r.coefficients)
    c.push_back({{"j1", key.first}, {"j2", key.second}, {"coeff", to_string(v)}});
  j["coefficients"] = c;
  return j;
}

json to_json(const CLTReport& r) {
  json j;
  j["alpha"] = to_string(r.alpha);
  j["j_max"] = r.j_max;
  j["max_degree"] = r.max_degree;
  j["max_n_exponent"] = r.max_n_exponent;
  json c = json::array();
  for (const auto& [key, v] : r.n0_part)
    c.push_back({{"j1", key.first}, {"j2", key.second}, {"coeff", to_string(v)}});
  j["n0_part"] = c;
  j["limit"] = to_json(r.limit);
  j["equal"] = r.equal;
  j["graphs_checked"] = r.graphs_checked;
  return j;
}

}  // namespace moebius
