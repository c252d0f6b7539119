#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "antiramsey/cliques.hpp"
#include "antiramsey/colouring.hpp"
#include "antiramsey/density.hpp"
#include "antiramsey/engine.hpp"
#include "antiramsey/errors.hpp"
#include "antiramsey/experiments.hpp"
#include "antiramsey/io.hpp"
#include "antiramsey/k4.hpp"
#include "antiramsey/oracle.hpp"
#include "antiramsey/random.hpp"
#include "antiramsey/stage.hpp"
#include "antiramsey/structure.hpp"

namespace antiramsey::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<int> k;
  std::string input = "-";
  bool input_given = false;
  std::optional<std::uint64_t> seed;
  std::string format = "json";
  std::size_t guard_edges = OracleGuard{}.max_edges;
  std::size_t trials = 200;
  std::string colouring;

  int vmax = 12;
  std::string threshold;
  std::size_t budget = CensusGuard{}.max_sets;
  Vertex n = 100;
  std::optional<double> p;
  std::optional<double> c;
  std::uint64_t trial = 0;
  std::vector<double> exponents;
  int census_vmax = 12;
  std::size_t census_budget = ScanOptions{}.census_guard.max_sets;
};

struct Rendered {
  json payload;
  std::string text;  // filled for non-JSON formats
};

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw DomainError("cannot open input file '" + path + "'");
  buffer << file.rdbuf();
  return buffer.str();
}

int require_k(const Options& o, int min_k) {
  if (!o.k) throw UsageError("--k is required for this subcommand");
  if (*o.k < min_k) throw DomainError("--k must be at least " + std::to_string(min_k));
  return *o.k;
}

std::uint64_t require_seed(const Options& o) {
  if (!o.seed) throw UsageError("--seed is required: randomness is never seeded implicitly");
  return *o.seed;
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  std::string list;
  for (const char* f : allowed) list += (list.empty() ? "" : ", ") + std::string(f);
  throw UsageError("--format " + o.format + " is not available here (use " + list + ")");
}

Rational ceiling_for(int k) { return k == 4 ? k4_density_ceiling() : density_ceiling(k); }

std::string join(const VertexSet& s, char sep) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? std::string(1, sep) : "") + std::to_string(s[i]);
  return out;
}

std::string coloured_edge_list(const Graph& g, const Colouring& c) {
  std::ostringstream out;
  out << "n=" << g.order() << '\n';
  for (std::size_t e = 0; e < g.size(); ++e)
    out << g.edges()[e].u << ' ' << g.edges()[e].v << ' ' << c[e] << '\n';
  return out.str();
}

Rendered cmd_density(const Graph& g, const Options& o) {
  require_format(o, {"json", "text"});
  const auto densest = densest_subgraph(g);
  std::optional<Rational> m2;
  if (g.order() >= 3) m2 = max_2_density(g);
  json payload = {{"n", g.order()},
                  {"e", g.size()},
                  {"m", densest.density.to_string()},
                  {"m2", m2 ? json(m2->to_string()) : json(nullptr)},
                  {"densest", densest.vertices}};
  std::string text = "m = " + densest.density.to_string() + "\nm2 = " + (m2 ? m2->to_string() : "undefined") +
                     "\ndensest = " + join(densest.vertices, ' ') + "\n";
  return {payload, text};
}

Rendered cmd_cliques(const Graph& g, const Options& o) {
  require_format(o, {"json", "csv", "text"});
  const int k = require_k(o, 3);
  const auto cliques = enumerate_cliques(g, k);
  std::string text;
  for (const auto& c : cliques) text += join(c, o.format == "csv" ? ',' : ' ') + "\n";
  return {{{"k", k}, {"count", cliques.size()}, {"cliques", cliques}}, text};
}

Rendered cmd_components(const Graph& g, const Options& o) {
  require_format(o, {"json", "text"});
  const int k = require_k(o, 4);
  auto list = json::array();
  std::string text;
  for (const auto& sub : kk_components(g, k)) {
    const auto m = max_density(sub.graph);
    const auto b = k == 4 ? badness_k4(sub.graph) : badness(sub.graph, k);
    list.push_back({{"vertices", sub.to_parent},
                    {"edges", sub.graph.size()},
                    {"badness", b},
                    {"maxDensity", m.to_string()},
                    {"sparse", m < ceiling_for(k)}});
    text += "vertices " + join(sub.to_parent, ' ') + " | edges " + std::to_string(sub.graph.size()) + " | badness " +
            std::to_string(b) + " | m " + m.to_string() + "\n";
  }
  return {{{"k", k}, {"components", list}}, text};
}

Rendered cmd_peel(const Graph& g, const Options& o) {
  require_format(o, {"json", "text"});
  const int k = require_k(o, 4);
  const auto ledger = k == 4 ? Ledger::K4 : Ledger::Standard;
  const auto trace = k == 4 ? peel_trace_k4(g) : peel_trace(g, k);
  const auto b = k == 4 ? badness_k4(g) : badness(g, k);
  json payload = {{"k", k}, {"badness", b}, {"ledgerTotal", ledger_total(trace, k, ledger)}, {"trace", to_json(trace)}};
  std::string text;
  for (const auto& s : trace.steps) {
    text += "v=" + std::to_string(s.v) + " " + s.config.label() + " edges-" + std::to_string(s.edge_delta) +
            " badness-" + std::to_string(s.badness_delta) + "\n";
  }
  text += "steps " + std::to_string(trace.total_steps()) + ", badness " + std::to_string(b) + "\n";
  return {payload, text};
}

Rendered cmd_colour(const Graph& g, const Options& o) {
  require_format(o, {"json", "text"});
  const int k = require_k(o, 4);
  json payload = {{"k", k}, {"graph", graph_to_json(g)}};
  Colouring colouring;
  if (k == 4) {
    colouring = colour_graph_k4(g);
    auto comps = json::array();
    for (const auto& sub : kk_components(g, 4))
      comps.push_back({{"vertices", sub.to_parent}, {"badness", badness_k4(sub.graph)}});
    payload["components"] = comps;
  } else {
    auto result = colour_graph_with_reports(g, k);
    colouring = std::move(result.colouring);
    auto comps = json::array();
    for (const auto& r : result.components) comps.push_back(to_json(r));
    payload["components"] = comps;
    const auto stage = check_stage(g, colouring, k);
    payload["stage"] = stage ? json(to_string(*stage)) : json(nullptr);
  }
  payload["colouring"] = colouring_to_json(g, colouring);
  payload["colours"] = colouring.max_colour();
  return {payload, coloured_edge_list(g, colouring)};
}

Rendered cmd_verify(const std::string& text, const Options& o, std::istream& in) {
  require_format(o, {"json", "text"});
  const int k = require_k(o, 3);
  Graph g;
  Colouring c;
  const auto first = text.find_first_not_of(" \t\r\n");
  json doc = first != std::string::npos && text[first] == '{' ? json::parse(text) : json();
  if (doc.is_object() && doc.contains("graph")) {
    g = graph_from_json(doc.at("graph"));
    c = colouring_from_json(g, doc.at("colouring"));
  } else {
    if (o.colouring.empty()) throw UsageError("verify needs a {graph, colouring} document or --colouring FILE");
    g = parse_graph_any(text);
    c = colouring_from_json(g, json::parse(read_source(o.colouring, in)));
  }
  require_proper(g, c);
  const auto full = complete_colouring(g, c);
  const auto witness = find_rainbow_clique(g, full, k);
  json payload = {{"k", k},
                  {"edges", g.size()},
                  {"coloured", c.coloured_count()},
                  {"rainbow", witness ? to_json(*witness) : json(nullptr)},
                  {"valid", !witness}};
  std::string out = witness ? "rainbow K_" + std::to_string(k) + " on " + join(witness->clique, ' ') + "\n"
                            : "no rainbow K_" + std::to_string(k) + "\n";
  return {payload, out};
}

Rendered cmd_force_check(const Graph& g, const Options& o) {
  require_format(o, {"json", "text"});
  const int k = require_k(o, 3);
  OracleGuard guard;
  guard.max_edges = o.guard_edges;
  const auto avoiding = brute_force_no_rainbow_colouring(g, k, guard);
  json payload = {{"k", k}, {"forced", !avoiding}};
  if (avoiding) payload["colouring"] = colouring_to_json(g, *avoiding);
  return {payload, avoiding ? "not forced\n" : "forced\n"};
}

Rendered cmd_witness_j(const std::string* text, const Options& o) {
  require_format(o, {"json", "text"});
  if (text == nullptr) {
    const auto j = witness_j();
    return {graph_to_json(j), format_edge_list(j)};
  }
  const auto g = parse_graph_any(*text);
  const auto found = find_witness_j(g);
  json payload = {{"found", found.has_value()}, {"vertices", found ? json(*found) : json(nullptr)}};
  return {payload, found ? "J on " + join(*found, ' ') + "\n" : "no J\n"};
}

Rendered cmd_census(const Graph& g, const Options& o) {
  require_format(o, {"json", "csv", "text"});
  Rational threshold = k4_density_ceiling();
  if (!o.threshold.empty()) {
    threshold = Rational::parse(o.threshold);
  } else if (o.k) {
    threshold = ceiling_for(require_k(o, 4));
  }
  CensusGuard guard;
  guard.max_sets = o.budget;
  const auto sets = dense_subgraph_census(g, o.vmax, threshold, guard);
  std::string text;
  for (const auto& s : sets) text += join(s, o.format == "csv" ? ',' : ' ') + "\n";
  return {{{"vmax", o.vmax}, {"threshold", threshold.to_string()}, {"count", sets.size()}, {"sets", sets}}, text};
}

Rendered cmd_gnp(const Options& o) {
  require_format(o, {"json", "text"});
  const auto seed = require_seed(o);
  if (o.p.has_value() == o.c.has_value()) throw UsageError("gnp needs exactly one of --p and --c");
  const double p = o.p ? *o.p : std::pow(static_cast<double>(o.n), -*o.c);
  const auto g = gnp(o.n, p, seed, o.trial);
  return {graph_to_json(g), format_edge_list(g)};
}

Rendered cmd_scan(const Options& o) {
  require_format(o, {"json", "csv", "text"});
  const int k = require_k(o, 4);
  const auto seed = require_seed(o);
  if (o.exponents.empty()) throw UsageError("scan needs --exponents");
  ScanOptions options;
  options.census_vmax = o.census_vmax;
  options.census_guard.max_sets = o.census_budget;
  const auto rows = threshold_scan(k, o.n, o.exponents, o.trials, seed, options);
  std::string text = scan_csv(rows);
  if (o.format == "text") {
    std::ostringstream t;
    for (const auto& r : rows) {
      t << "c=" << r.c << " p=" << r.p << " J=" << (r.rate_j ? std::to_string(*r.rate_j) : "-")
        << " colourable=" << r.rate_colourable << " census=" << r.rate_census
        << " undecided=" << r.census_undecided << '\n';
    }
    text = t.str();
  }
  return {scan_json(rows), text};
}

json error_payload(const std::string& kind, const std::string& message) {
  return {{"status", "error"}, {"error", kind}, {"message", message}};
}

}  // namespace

CommandResult run(const std::vector<std::string>& args, std::istream& in) {
  CommandResult result;
  Options o;
  CLI::App app{"Anti-Ramsey colouring toolkit for K_k-sparse graphs", "antiramsey"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--k", o.k, "Clique size k");
  auto* input = app.add_option("--input", o.input, "Graph file, or - for stdin");
  app.add_option("--seed", o.seed, "Random seed (required by gnp and scan)");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--guard-edges", o.guard_edges, "Largest graph the exhaustive oracle accepts");
  app.add_option("--trials", o.trials, "Trials per exponent in scan");
  app.add_option("--colouring", o.colouring, "Colouring JSON file for verify");

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"density", "Maximum density m and maximum 2-density m2"},
      {"cliques", "Enumerate the K_k subgraphs"},
      {"components", "K_k-components with badness and density"},
      {"peel", "Minimum-degree peel trace with ledger deltas"},
      {"colour", "Colour without a rainbow K_k"},
      {"verify", "Check a colouring for rainbow K_k"},
      {"force-check", "Exhaustively test whether every colouring has a rainbow K_k"},
      {"witness-j", "Emit the witness graph J, or search an input graph for it"},
      {"census", "Minimal dense vertex sets of bounded size"},
      {"gnp", "Sample G(n, p)"},
      {"scan", "Threshold scan over p = n^-c"},
  };
  std::map<std::string, CLI::App*> sub;
  for (const auto& [name, help] : commands) sub[name] = app.add_subcommand(name, help);
  sub["census"]->add_option("--vmax", o.vmax, "Largest set size");
  sub["census"]->add_option("--threshold", o.threshold, "Density threshold p/q (default from --k, else 15/7)");
  sub["census"]->add_option("--budget", o.budget, "Connected sets examined before giving up");
  for (const char* name : {"gnp", "scan"}) sub[name]->add_option("--n", o.n, "Vertex count");
  sub["gnp"]->add_option("--p", o.p, "Edge probability");
  sub["gnp"]->add_option("--c", o.c, "Exponent, p = n^-c");
  sub["gnp"]->add_option("--trial", o.trial, "Trial index within the seed's stream");
  sub["scan"]->add_option("--exponents", o.exponents, "Comma-separated exponents c")->delimiter(',');
  sub["scan"]->add_option("--census-vmax", o.census_vmax, "Census set size, 0 disables the census");
  sub["scan"]->add_option("--census-budget", o.census_budget, "Per-sample census budget");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.output = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.code = ExitCode::UsageError;
    result.payload = error_payload("usage", e.what());
    result.diagnostics.push_back(e.what());
    return result;
  }
  o.input_given = input->count() > 0;
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    Rendered r;
    const auto graph_input = [&] { return parse_graph_any(read_source(o.input, in)); };
    if (command == "density") r = cmd_density(graph_input(), o);
    else if (command == "cliques") r = cmd_cliques(graph_input(), o);
    else if (command == "components") r = cmd_components(graph_input(), o);
    else if (command == "peel") r = cmd_peel(graph_input(), o);
    else if (command == "colour") r = cmd_colour(graph_input(), o);
    else if (command == "verify") r = cmd_verify(read_source(o.input, in), o, in);
    else if (command == "force-check") r = cmd_force_check(graph_input(), o);
    else if (command == "census") r = cmd_census(graph_input(), o);
    else if (command == "gnp") r = cmd_gnp(o);
    else if (command == "scan") r = cmd_scan(o);
    else if (command == "witness-j") {
      if (o.input_given) {
        const auto text = read_source(o.input, in);
        r = cmd_witness_j(&text, o);
      } else {
        r = cmd_witness_j(nullptr, o);
      }
    }
    result.payload = r.payload;
    result.output = o.format == "json" ? r.payload.dump() + "\n" : r.text;
    if (r.payload.is_object() && r.payload.contains("valid") && !r.payload["valid"].get<bool>()) {
      result.code = ExitCode::DomainError;
      result.diagnostics.emplace_back("colouring contains a rainbow clique");
    }
  } catch (const UsageError& e) {
    result.code = ExitCode::UsageError;
    result.payload = error_payload("usage", e.what());
  } catch (const DensityViolation& e) {
    result.code = ExitCode::DomainError;
    result.payload = error_payload("density-violation", e.what());
    result.payload["witness"] = e.witness();
    result.payload["density"] = e.density().to_string();
  } catch (const GuardExceeded& e) {
    result.code = ExitCode::DomainError;
    result.payload = error_payload("guard-exceeded", e.what());
  } catch (const DomainError& e) {
    result.code = ExitCode::DomainError;
    result.payload = error_payload("domain", e.what());
  } catch (const nlohmann::json::exception& e) {
    result.code = ExitCode::DomainError;
    result.payload = error_payload("schema", e.what());
  } catch (const InvariantViolation& e) {
    result.code = ExitCode::InvariantViolation;
    result.payload = error_payload("invariant-violation", e.what());
  } catch (const ClassificationError& e) {
    result.code = ExitCode::InvariantViolation;
    result.payload = error_payload("classification", e.what());
  } catch (const std::exception& e) {
    result.code = ExitCode::InvariantViolation;
    result.payload = error_payload("internal", e.what());
  }
  if (!result.ok() && result.diagnostics.empty()) result.diagnostics.push_back(result.payload.dump());
  return result;
}

int main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto result = run(args, in);
  out << result.output;
  for (const auto& d : result.diagnostics) err << d << '\n';
  return static_cast<int>(result.code);
}

}  // namespace antiramsey::cli
