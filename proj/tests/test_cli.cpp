#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "moebius/cli.hpp"
#include "moebius/json_io.hpp"

using namespace moebius;

namespace {

struct Result {
  int code;
  std::string out;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "moebius");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  int code = run(static_cast<int>(argv.size()), argv.data(), out);
  return {code, out.str()};
}

json call_json(std::vector<std::string> args) {
  auto r = call(std::move(args));
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

std::string error_kind(const Result& r) { return json::parse(r.out)["error"]["kind"]; }

}  // namespace

TEST_CASE("rational and polynomial round trips") {
  CHECK(to_json(ratio(-3, 6)) == "-1/2");
  CHECK(to_json(BigRational(4)) == "4/1");
  CHECK(rational_from_json("7") == 7);
  CHECK_THROWS_AS(rational_from_json(json(3)), StructuralError);

  NPolynomial p = NPolynomial::monomial(-1, ratio(2, 3)) + NPolynomial::monomial(2, 5);
  CHECK(npoly_from_json(to_json(p)) == p);
  AlphaNPolynomial a = AlphaNPolynomial::monomial(-1, 2, ratio(1, 4));
  CHECK(alpha_npoly_from_json(to_json(a)) == a);
}

TEST_CASE("series round trips") {
  ExpansionOptions o;
  o.max_degree = 6;
  auto s = expand_logZ(1, NormalizationTag::master, o);
  CHECK(coupling_series_from_json(json::parse(to_json(s).dump())) == s);
  auto inv = expand_logZ_invariant(o);
  CHECK(alpha_series_from_json(json::parse(to_json(inv).dump())) == inv);
  auto z = K_series(4, 2);
  CHECK(zseries_from_json(json::parse(to_json(z).dump())) == z);

  json bad = to_json(s);
  bad["max_degree"] = 2;
  CHECK_THROWS_AS(coupling_series_from_json(bad), StructuralError);
}

TEST_CASE("graph round trip") {
  auto g = graphs::klein();
  CHECK(graph_from_json(to_json(g)) == g);
  json bad = to_json(graphs::theta());
  bad["edges"][0][1] = 0;
  CHECK_THROWS_AS(graph_from_json(bad), StructuralError);
}

TEST_CASE("expand") {
  auto j = call_json({"expand", "--beta", "1", "--tag", "master", "--max-degree", "2"});
  auto s = coupling_series_from_json(j);
  CHECK(s.coeff({2}) ==
        NPolynomial::monomial(2, ratio(1, 4)) + NPolynomial::monomial(1, ratio(1, 4)));

  ExpansionOptions o;
  o.max_degree = 6;
  auto j6 = call_json({"expand", "--beta", "4", "--tag", "master", "--max-degree", "6", "--format", "json"});
  CHECK(coupling_series_from_json(j6) == expand_logZ(4, NormalizationTag::master, o));

  auto csv = call({"--format", "csv", "expand", "--beta", "1", "--max-degree", "2"});
  CHECK(csv.code == 0);
  CHECK(csv.out.find("t_2,1/4*N^2 + 1/4*N") != std::string::npos);
}

TEST_CASE("graphs") {
  auto j = call_json({"graphs", "--profile", "2:1"});
  REQUIRE(j.size() == 2);
  CHECK(j[0]["aut_moebius"] == 4);
  auto r = call({"graphs", "--profile", "3:20"});
  CHECK(r.code == 5);
  CHECK(error_kind(r) == "resource");
}

TEST_CASE("mu") {
  auto j = call_json({"mu", "--named", "klein", "--beta", "4"});
  CHECK(j["mu_bruteforce"] == 4);
  CHECK(j["equal"] == true);

  std::string path = "cli_test_graph.json";
  {
    std::ofstream f(path);
    f << to_json(graphs::theta()).dump();
  }
  auto t = call_json({"mu", "--graph", path, "--beta", "4"});
  CHECK(t["mu_closed"] == 16);
  {
    std::ofstream f(path);
    f << R"({"rotations":[[0,1]],"edges":[[0,0]],"twists":[false]})";
  }
  auto bad = call({"mu", "--graph", path, "--beta", "4"});
  CHECK(bad.code == 3);
  CHECK(error_kind(bad) == "structural");
  std::remove(path.c_str());

  auto missing = call({"mu", "--graph", "no_such_file.json", "--beta", "4"});
  CHECK(missing.code == 8);
  CHECK(error_kind(missing) == "io");
}

TEST_CASE("duality") {
  auto r = call({"--format", "table", "duality", "--alpha", "2", "--max-degree", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("involution holds: true") != std::string::npos);
  auto j = call_json({"duality", "--alpha", "1/2", "--max-degree", "4"});
  CHECK(j["involution_holds"] == true);
}

TEST_CASE("penner, charpoly, clt, oracle") {
  auto k = zseries_from_json(call_json({"penner", "--model", "K", "--alpha", "2", "--order", "1"}));
  CHECK(k == K_series(1, 2));
  auto e = call_json({"penner", "euler", "--q", "0", "--n", "2"});
  CHECK(e.dump().find("-1/8") != std::string::npos);
  auto bhq = call_json({"charpoly", "verify", "--which", "BHQ", "--N", "2", "--k", "1"});
  CHECK(bhq["equal"] == true);
  auto clt = call_json({"clt", "--alpha", "1", "--jmax", "2"});
  CHECK(clt["coefficients"][0]["coeff"] == "1/2");
  auto oracle = call({"oracle", "--beta", "1", "--n", "2", "--max-degree", "4"});
  CHECK(oracle.code == 0);
}

TEST_CASE("errors and exit codes") {
  auto none = call({});
  CHECK(none.code == 2);
  CHECK(error_kind(none) == "usage");
  CHECK(call({"bogus"}).code == 2);
  CHECK(call({"expand", "--beta", "3"}).code == 2);
  auto pre = call({"penner", "euler", "--q", "0", "--n", "1"});
  CHECK(pre.code == 4);
  CHECK(error_kind(pre) == "precondition");
}

TEST_CASE("thread count does not change output") {
  auto a = call({"--threads", "1", "expand", "--beta", "1", "--max-degree", "6"});
  auto b = call({"--threads", "4", "expand", "--beta", "1", "--max-degree", "6"});
  CHECK(a.out == b.out);
}
