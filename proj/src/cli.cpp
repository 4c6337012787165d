#include "moebius/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "moebius/clt.hpp"
#include "moebius/config.hpp"
#include "moebius/dual_char.hpp"
#include "moebius/enumerate.hpp"
#include "moebius/errors.hpp"
#include "moebius/expansion.hpp"
#include "moebius/json_io.hpp"
#include "moebius/oracle.hpp"
#include "moebius/parallel.hpp"
#include "moebius/penner.hpp"
#include "moebius/unit_sprinkle.hpp"

namespace moebius {

namespace {

enum class Format { json, csv, table };

struct Output {
  json doc;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void emit(std::ostream& out, const Output& o, Format fmt) {
  if (fmt == Format::json) {
    out << o.doc.dump(2) << "\n";
    return;
  }
  if (fmt == Format::csv) {
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_field(r[i]);
      out << "\n";
    };
    line(o.header);
    for (const auto& r : o.rows) line(r);
    return;
  }
  std::vector<std::size_t> width(o.header.size());
  for (std::size_t i = 0; i < o.header.size(); ++i) width[i] = o.header[i].size();
  for (const auto& r : o.rows)
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i)
      width[i] = std::max(width[i], r[i].size());
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      out << r[i];
      if (i + 1 < r.size()) out << std::string(width[i] - r[i].size() + 2, ' ');
    }
    out << "\n";
  };
  line(o.header);
  for (const auto& r : o.rows) line(r);
}

std::string mono(const Monomial& m, const std::string& symbol = "t") {
  return m.empty() ? "1" : monomial_to_string(m, symbol.c_str());
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

Output series_output(const CouplingSeries& s, const std::string& symbol = "t") {
  Output o{to_json(s), {"monomial", "coefficient"}, {}};
  for (const auto& [m, c] : s.terms()) o.rows.push_back({mono(m, symbol), to_string(c)});
  return o;
}

Output zseries_output(const ZSeries& s) {
  Output o{to_json(s), {"z_exponent", "coefficient"}, {}};
  for (const auto& [k, c] : s.terms()) o.rows.push_back({std::to_string(k), to_string(c)});
  return o;
}

Output key_value_output(const json& doc) {
  Output o{doc, {"key", "value"}, {}};
  for (const auto& [k, v] : doc.items())
    o.rows.push_back({k, v.is_string() ? v.get<std::string>() : v.dump()});
  return o;
}

MoebiusGraph named_graph(const std::string& name) {
  if (name == "loop") return graphs::loop(false);
  if (name == "twisted-loop") return graphs::loop(true);
  if (name == "theta") return graphs::theta();
  if (name == "dumbbell") return graphs::dumbbell();
  if (name == "single-edge") return graphs::single_edge();
  if (name == "figure-eight") return graphs::figure_eight(false, false, false);
  if (name == "torus") return graphs::figure_eight(true, false, false);
  if (name == "klein") return graphs::klein();
  throw UsageError("unknown graph name '" + name +
                   "' (loop, twisted-loop, theta, dumbbell, single-edge, figure-eight, torus, klein)");
}

MoebiusGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw StructuralError("cannot parse " + path + ": " + e.what());
  }
  return graph_from_json(j);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("expected a comma-separated list of integers, got '" + text + "'");
    }
  }
  return out;
}

json error_record(ErrorKind kind, const std::string& message) {
  json e;
  e["kind"] = std::string(to_string(kind));
  e["code"] = exit_code(kind);
  e["message"] = message;
  return json{{"error", e}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"Möbius-graph expansions of Gaussian matrix integrals", "moebius"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string format_name = "json";
  int threads = 0;
  Budgets b = budgets();
  app.add_option("--format", format_name, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--threads", threads, "worker threads (default: hardware)");
  app.add_option("--half-edge-budget", b.half_edges, "largest enumerated profile");
  app.add_option("--mu-budget", b.mu_assignments, "largest brute-force unit assignment count");
  app.add_option("--oracle-degree-budget", b.oracle_degree, "largest oracle degree");

  // graphs
  auto* graphs_cmd = app.add_subcommand("graphs", "catalog of graphs with a valence profile");
  std::string profile_text, family_name = "moebius";
  bool all_components = false;
  graphs_cmd->add_option("--profile", profile_text, "valence profile, e.g. 3:2,4:1")->required();
  graphs_cmd->add_flag("--connected", "connected graphs only (default)");
  graphs_cmd->add_flag("--all", all_components, "include disconnected graphs");
  graphs_cmd->add_option("--family", family_name)->check(CLI::IsMember({"moebius", "ribbon"}));

  // expand
  auto* expand_cmd = app.add_subcommand("expand", "graph-sum expansion of log Z");
  int beta = 0, max_degree = 4;
  std::string tag_name = "master", alpha_text;
  bool no_t1 = false, no_t2 = false, full_z = false;
  expand_cmd->add_option("--beta", beta, "1, 2 or 4");
  expand_cmd->add_option("--tag", tag_name, "master, rescaled, hermitian, gse-penner, invariant");
  expand_cmd->add_option("--alpha", alpha_text, "numeric alpha for the invariant tag");
  expand_cmd->add_option("--max-degree", max_degree);
  expand_cmd->add_flag("--no-t1", no_t1);
  expand_cmd->add_flag("--no-t2", no_t2);
  expand_cmd->add_flag("--z", full_z, "expand Z instead of log Z");

  // mu
  auto* mu_cmd = app.add_subcommand("mu", "unit-sprinkling invariant of one graph");
  std::string graph_file, graph_name;
  int mu_beta = 1;
  mu_cmd->add_option("--graph", graph_file, "graph JSON file");
  mu_cmd->add_option("--named", graph_name, "built-in graph");
  mu_cmd->add_option("--beta", mu_beta)->required();

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "compare the graph sum with eigenvalue moments");
  int oracle_beta = 1, oracle_degree = 4;
  std::string oracle_sizes = "1,2,3", oracle_tag = "master";
  oracle_cmd->add_option("--beta", oracle_beta);
  oracle_cmd->add_option("--n", oracle_sizes, "matrix sizes, comma-separated");
  oracle_cmd->add_option("--max-degree", oracle_degree);
  oracle_cmd->add_option("--tag", oracle_tag);
  auto* mc_cmd = oracle_cmd->add_subcommand("mc", "Monte Carlo estimate of a moment");
  int mc_beta = 1, mc_n = 2;
  std::string mc_powers = "2", mc_c = "1/4";
  std::int64_t mc_samples = 100000;
  std::uint64_t mc_seed = 7;
  mc_cmd->add_option("--beta", mc_beta);
  mc_cmd->add_option("--n", mc_n);
  mc_cmd->add_option("--powers", mc_powers, "trace powers, comma-separated");
  mc_cmd->add_option("--c", mc_c, "density exp(-c tr X^2)");
  mc_cmd->add_option("--samples", mc_samples);
  mc_cmd->add_option("--seed", mc_seed);

  // penner
  auto* penner_cmd = app.add_subcommand("penner", "Penner-model closed forms");
  std::string model = "K", r_text;
  int p_alpha = 2, p_gamma = 2, order = 4;
  std::string ensemble_name = "gse";
  penner_cmd->add_option("--model", model, "K, J, I, K1, K2 or graph")
      ->check(CLI::IsMember({"K", "J", "I", "K1", "K2", "graph"}));
  penner_cmd->add_option("--alpha", p_alpha);
  penner_cmd->add_option("--gamma", p_gamma);
  penner_cmd->add_option("--r", r_text, "integer or 1/integer, for model I");
  penner_cmd->add_option("--order", order);
  penner_cmd->add_option("--ensemble", ensemble_name, "goe, gue or gse, for model graph");
  auto* euler_cmd = penner_cmd->add_subcommand("euler", "Euler characteristic of real moduli");
  int eq = 0, en = 2;
  bool graph_sum = false;
  euler_cmd->add_option("--q", eq)->required();
  euler_cmd->add_option("--n", en)->required();
  euler_cmd->add_flag("--graph-sum", graph_sum, "also sum over the graph catalog");

  // charpoly
  auto* char_cmd = app.add_subcommand("charpoly", "characteristic-polynomial duality");
  std::string char_ensemble = "gue", side = "lhs";
  int char_degree = 4;
  char_cmd->add_option("--ensemble", char_ensemble);
  char_cmd->add_option("--side", side)->check(CLI::IsMember({"lhs", "rhs"}));
  char_cmd->add_option("--max-degree", char_degree);
  auto* verify_cmd = char_cmd->add_subcommand("verify", "exact check of the polynomial identity");
  std::string which = "BHC";
  int vn = 1, vk = 1;
  verify_cmd->add_option("--which", which);
  verify_cmd->add_option("--N", vn);
  verify_cmd->add_option("--k", vk);

  // clt
  auto* clt_cmd = app.add_subcommand("clt", "large-N limit of the centred log moment generator");
  std::string clt_alpha = "1";
  int jmax = 4, clt_degree = 6;
  bool clt_verify = false;
  clt_cmd->add_option("--alpha", clt_alpha, "1/2, 1 or 2");
  clt_cmd->add_option("--jmax", jmax);
  clt_cmd->add_flag("--verify", clt_verify);
  clt_cmd->add_option("--max-degree", clt_degree);

  // duality
  auto* dual_cmd = app.add_subcommand("duality", "alpha -> 1/alpha, N -> -alpha N");
  std::string dual_alpha = "2";
  int dual_degree = 6;
  dual_cmd->add_option("--alpha", dual_alpha);
  dual_cmd->add_option("--max-degree", dual_degree);

  Format fmt = Format::json;
  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return 0;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (const CLI::ParseError& e) {
      throw UsageError(e.what());
    }
    fmt = format_name == "csv" ? Format::csv : format_name == "table" ? Format::table : Format::json;
    if (threads < 0) throw UsageError("--threads must be non-negative");
    if (threads > 0) set_thread_count(threads);
    if (b.half_edges < 0 || b.mu_assignments < 0 || b.oracle_degree < 0)
      throw UsageError("budgets must be non-negative");
    set_budgets(b);

    Output o;
    if (*graphs_cmd) {
      const Family family = family_name == "ribbon" ? Family::ribbon : Family::moebius;
      const auto catalog = enumerate_graphs(parse_profile(profile_text), !all_components, family);
      o.doc = json::array();
      o.header = {"code", "v", "e", "f", "chi", "natural", "genus", "sigma", "aut_moebius",
                  "aut_ribbon", "graph"};
      for (const auto& e : catalog) {
        o.doc.push_back(to_json(e));
        const auto& t = e.topology;
        o.rows.push_back({hex_code(e.code), std::to_string(t.v), std::to_string(t.e),
                          std::to_string(t.f), std::to_string(t.chi), std::to_string(t.natural),
                          std::to_string(t.genus), std::to_string(t.sigma),
                          std::to_string(e.aut_moebius),
                          e.aut_ribbon ? std::to_string(*e.aut_ribbon) : "-",
                          to_json(e.graph).dump()});
      }
    } else if (*expand_cmd) {
      const NormalizationTag tag = parse_tag(tag_name);
      ExpansionOptions opts;
      opts.max_degree = max_degree;
      opts.include_t1 = !no_t1;
      opts.include_t2 = !no_t2;
      if (max_degree < 0) throw UsageError("--max-degree must be non-negative");
      if (tag == NormalizationTag::invariant && alpha_text.empty() && beta == 0) {
        if (full_z) throw UsageError("--z needs a numeric alpha or beta for the invariant tag");
        const AlphaSeries s = expand_logZ_invariant(opts);
        o = {to_json(s), {"monomial", "coefficient"}, {}};
        for (const auto& [m, c] : s.terms()) o.rows.push_back({mono(m), to_string(c)});
      } else {
        CouplingSeries s;
        if (tag == NormalizationTag::invariant && !alpha_text.empty()) {
          s = expand_logZ_invariant(parse_rational(alpha_text), opts);
        } else {
          if (!alpha_text.empty()) throw UsageError("--alpha applies to the invariant tag only");
          if (beta != 1 && beta != 2 && beta != 4) throw UsageError("--beta must be 1, 2 or 4");
          s = expand_logZ(beta, tag, opts);
        }
        if (full_z) s = exp(s);
        o = series_output(s);
      }
    } else if (*mu_cmd) {
      if (graph_file.empty() == graph_name.empty())
        throw UsageError("give exactly one of --graph and --named");
      const MoebiusGraph g = graph_file.empty() ? named_graph(graph_name) : read_graph_file(graph_file);
      const MuReport r = mu_report(g, mu_beta, graph_file.empty() ? graph_name : graph_file);
      if (r.mu_bruteforce != r.mu_closed)
        throw VerificationFailure("brute force gives " + std::to_string(r.mu_bruteforce) +
                                  ", closed form " + std::to_string(r.mu_closed));
      o = {to_json(r),
           {"graph_id", "beta", "mu_bruteforce", "mu_closed", "configurations_counted"},
           {{r.graph_id, std::to_string(r.beta), std::to_string(r.mu_bruteforce),
             std::to_string(r.mu_closed), std::to_string(r.configurations_counted)}}};
    } else if (*mc_cmd) {
      const auto powers = parse_int_list(mc_powers);
      const BigRational c = parse_rational(mc_c);
      if (c <= 0) throw UsageError("--c must be positive");
      if (mc_samples < 2) throw UsageError("--samples must be at least 2");
      const McEstimate m = mc_estimate(mc_beta, mc_n, powers, mc_samples, mc_seed, c.get_d());
      json doc = to_json(m);
      const BigRational exact = eigenvalue_moment(MomentQuery{mc_beta, mc_n, powers, c});
      doc["exact"] = to_string(exact);
      const double sigmas =
          m.standard_error > 0 ? std::abs(m.mean - exact.get_d()) / m.standard_error : 0.0;
      doc["deviation_in_standard_errors"] = sigmas;
      std::ostringstream mean, se, dev;
      mean << std::setprecision(10) << m.mean;
      se << std::setprecision(6) << m.standard_error;
      dev << std::setprecision(4) << sigmas;
      o = {doc,
           {"mean", "standard_error", "samples", "exact", "deviation"},
           {{mean.str(), se.str(), std::to_string(m.samples), to_string(exact), dev.str()}}};
    } else if (*oracle_cmd) {
      ExpansionOptions opts;
      opts.max_degree = oracle_degree;
      const auto reports = oracle_compare(oracle_beta, parse_tag(oracle_tag), opts,
                                          parse_int_list(oracle_sizes));
      o.doc = json::array();
      o.header = {"beta", "n", "monomial", "oracle", "graph_sum", "equal"};
      for (const auto& r : reports) {
        o.doc.push_back(to_json(r));
        o.rows.push_back({std::to_string(r.beta), std::to_string(r.n), mono(r.monomial),
                          to_string(r.exact), to_string(r.predicted), bool_str(r.equal)});
      }
    } else if (*euler_cmd) {
      json doc;
      doc["q"] = eq;
      doc["n"] = en;
      const BigRational closed = real_moduli_euler(eq, en);
      doc["closed_form"] = to_string(closed);
      std::vector<std::string> row{std::to_string(eq), std::to_string(en), to_string(closed)};
      if (graph_sum) {
        const BigRational g = real_moduli_graph_sum(2 * eq, en);
        if (g != closed)
          throw VerificationFailure("graph sum " + to_string(g) + " differs from closed form " +
                                    to_string(closed));
        doc["graph_sum"] = to_string(g);
        row.push_back(to_string(g));
      }
      o = {doc, {"q", "n", "closed_form"}, {row}};
      if (graph_sum) o.header.push_back("graph_sum");
    } else if (*penner_cmd) {
      ZSeries z;
      if (model == "K") z = K_series(order, p_alpha);
      else if (model == "J") z = J_series(order, p_gamma);
      else if (model == "K1") z = K1_series(order);
      else if (model == "K2") z = K2_series(order);
      else if (model == "I") {
        if (r_text.empty()) throw UsageError("model I needs --r");
        z = I_series(order, parse_rational(r_text));
      } else {
        const Ensemble ens = parse_ensemble(ensemble_name);
        if (ens == Ensemble::gse) z = penner_graph_series(NormalizationTag::gse_penner, 4, order);
        else if (ens == Ensemble::gue) z = penner_graph_series(NormalizationTag::hermitian, 2, order);
        else z = penner_graph_series(NormalizationTag::master, 1, order, BigRational(1, 2));
      }
      o = zseries_output(z);
    } else if (*verify_cmd) {
      const IdentityReport r = verify_polynomial_identity(vn, vk, parse_identity(which));
      o.doc = to_json(r);
      o.header = {"monomial", "nbyn_side", "kbyk_side"};
      for (const auto& [e, c] : r.lhs)
        o.rows.push_back({to_string(LambdaPolynomial{{e, 1}}), to_string(c), to_string(r.rhs.at(e))});
    } else if (*char_cmd) {
      const Ensemble ens = parse_ensemble(char_ensemble);
      const LambdaSeries s = side == "lhs" ? charpoly_lhs(ens, char_degree)
                                           : charpoly_rhs(ens, char_degree);
      o = series_output(s, "tau");
    } else if (*clt_cmd) {
      const BigRational a = parse_rational(clt_alpha);
      if (clt_verify) {
        const CLTReport r = verify_clt(a, jmax, clt_degree);
        o.doc = to_json(r);
        o.header = {"j1", "j2", "limit", "log_V_N0"};
        for (const auto& [key, c] : r.limit.coefficients) {
          if (key.first + key.second > clt_degree) continue;
          auto it = r.n0_part.find(key);
          o.rows.push_back({std::to_string(key.first), std::to_string(key.second), to_string(c),
                            it == r.n0_part.end() ? "0/1" : to_string(it->second)});
        }
      } else {
        const CLTResult r = clt_limit(a, jmax);
        o.doc = to_json(r);
        o.header = {"j1", "j2", "coefficient"};
        for (const auto& [key, c] : r.coefficients)
          o.rows.push_back({std::to_string(key.first), std::to_string(key.second), to_string(c)});
      }
    } else if (*dual_cmd) {
      ExpansionOptions opts;
      opts.max_degree = dual_degree;
      const DualityReport r = verify_duality(parse_rational(dual_alpha), opts);
      json doc;
      doc["alpha"] = to_string(r.alpha);
      doc["max_degree"] = r.max_degree;
      doc["graphs_checked"] = r.graphs_checked;
      doc["graph_by_graph"] = r.graph_by_graph;
      doc["series_fixed"] = r.series_fixed;
      doc["numeric"] = r.numeric;
      doc["involution_holds"] = r.holds();
      o = key_value_output(doc);
      if (fmt == Format::table) {
        out << "involution holds: " << bool_str(r.holds()) << "\n";
        return 0;
      }
    }
    emit(out, o, fmt);
    return 0;
  } catch (const Error& e) {
    out << error_record(e.kind(), e.what()).dump(2) << "\n";
    return exit_code(e.kind());
  } catch (const std::bad_alloc&) {
    out << error_record(ErrorKind::resource, "out of memory").dump(2) << "\n";
    return exit_code(ErrorKind::resource);
  }
}

}  // namespace moebius
