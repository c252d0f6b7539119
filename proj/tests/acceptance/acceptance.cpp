// Acceptance suite. Prints one PASS/FAIL line per criterion and exits non-zero
// when any criterion fails. `--only N` (repeatable) restricts the run.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "antiramsey/corpus.hpp"
#include "antiramsey/density.hpp"
#include "antiramsey/engine.hpp"
#include "antiramsey/errors.hpp"
#include "antiramsey/experiments.hpp"
#include "antiramsey/io.hpp"
#include "antiramsey/k4.hpp"
#include "antiramsey/oracle.hpp"
#include "antiramsey/random.hpp"
#include "cli.hpp"
#include "oracles.hpp"

using namespace antiramsey;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> problems;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (problems.size() < 5) problems.push_back(what);
  }
};

struct Criterion {
  int id;
  std::string name;
  std::function<void(Verdict&)> body;
};

// ---------------------------------------------------------------------------
// Shared corpora

std::vector<CorpusItem> k5_corpus() {
  std::vector<CorpusItem> out;
  auto add = [&](CorpusKind kind, const CorpusParams& p, std::uint64_t seed) {
    auto items = corpus(kind, 5, p, seed);
    out.insert(out.end(), std::make_move_iterator(items.begin()), std::make_move_iterator(items.end()));
  };
  CorpusParams mix;
  mix.count = 2000;
  add(CorpusKind::GluingMix, mix, 101);
  CorpusParams path;
  path.count = 1000;
  add(CorpusKind::CliqueChain, path, 102);
  CorpusParams tree = path;
  tree.tree = true;
  add(CorpusKind::CliqueChain, tree, 103);
  CorpusParams sparse;
  sparse.count = 1200;
  add(CorpusKind::RandomSparse, sparse, 104);
  return out;
}

const std::vector<CorpusItem>& shared_k5_corpus() {
  static const auto items = k5_corpus();
  return items;
}

std::vector<CorpusItem> k4_corpus() {
  std::vector<CorpusItem> out;
  CorpusParams p;
  p.count = 1000;
  for (const auto kind : {CorpusKind::GluingMix, CorpusKind::CliqueChain, CorpusKind::RandomSparse}) {
    auto items = corpus(kind, 4, p, 201);
    out.insert(out.end(), std::make_move_iterator(items.begin()), std::make_move_iterator(items.end()));
  }
  return out;
}

const std::vector<CorpusItem>& shared_k4_corpus() {
  static const auto items = k4_corpus();
  return items;
}

cli::CommandResult call(const std::vector<std::string>& args, const std::string& input) {
  std::istringstream in(input);
  return cli::run(args, in);
}

// Restriction of a colouring of g to the edges of a subgraph.
Colouring restrict(const Graph& g, const Colouring& c, const Subgraph& part) {
  Colouring out(part.graph.size());
  for (std::size_t e = 0; e < part.graph.size(); ++e) {
    const Edge pe = part.parent(part.graph.edges()[e]);
    const auto id = g.edge_id(pe.u, pe.v);
    if (c.is_coloured(id)) out.set(e, c[id]);
  }
  return out;
}

// Closed forms for the peel tables, written out here from the shapes of K(v)
// rather than taken from the library.
std::int64_t edges_at_r(const KvConfig& c, int k) {
  const std::int64_t l = c.ell;
  switch (c.kind) {
    case ConfigKind::X:
      return l * (l - 1) / 2 + l * (k - l);
    case ConfigKind::Y:
      return l * (l - 1) / 2 + l * (k + 1 - l);
    case ConfigKind::U:
      return k;
  }
  return -1;
}

void check_steps(const PeelTrace& t, int k, Verdict& v, std::size_t& steps) {
  for (const auto& s : t.steps) {
    ++steps;
    const auto expected_edges = edges_at_r(s.config, k);
    v.require(s.edge_delta == expected_edges,
              s.config.label() + " edge delta " + std::to_string(s.edge_delta) + " != " + std::to_string(expected_edges));
    const auto expected_b = 2 * expected_edges - static_cast<std::int64_t>(k + 1) * s.config.ell;
    v.require(s.badness_delta == expected_b, s.config.label() + " badness delta " + std::to_string(s.badness_delta) +
                                                 " != " + std::to_string(expected_b));
  }
  for (const auto& b : t.branches) check_steps(b, k, v, steps);
}

// ---------------------------------------------------------------------------
// Criteria

void soundness(Verdict& v) {
  const auto t0 = Clock::now();
  const auto& items = shared_k5_corpus();
  std::size_t coloured = 0;
  std::size_t verified = 0;
  for (const auto& item : items) {
    v.require(components_sparse(item.graph, 5), "corpus graph violates m < 3: " + item.recipe.dump());
    const auto input = graph_to_json(item.graph).dump();
    const auto c = call({"colour", "--k", "5", "--input", "-"}, input);
    if (!c.ok()) {
      v.require(false, "colour failed on " + item.recipe.dump() + ": " + c.payload.dump());
      continue;
    }
    ++coloured;
    const auto check = call({"verify", "--k", "5", "--input", "-"}, c.output);
    const bool valid = check.ok() && check.payload.value("valid", false);
    v.require(valid, "verify rejected " + item.recipe.dump());
    if (valid) ++verified;
  }
  const double elapsed = seconds_since(t0);
  v.require(items.size() >= 5000, "corpus has only " + std::to_string(items.size()) + " graphs");
  v.require(elapsed <= 600.0, "took longer than 10 minutes");
  v.detail << items.size() << " graphs, " << coloured << " coloured, " << verified << " verified rainbow-free in "
           << std::fixed << std::setprecision(1) << elapsed << " s";
}

void ledger_exactness(Verdict& v) {
  std::size_t steps = 0;
  std::size_t components = 0;
  for (const auto& item : shared_k5_corpus()) {
    for (const auto& comp : kk_components(item.graph, 5)) {
      ++components;
      try {
        const auto t = peel_trace(comp.graph, 5);
        check_steps(t, 5, v, steps);
        const std::int64_t direct =
            2 * static_cast<std::int64_t>(comp.graph.size()) - 6 * static_cast<std::int64_t>(comp.graph.order()) + 10;
        v.require(ledger_total(t, 5, Ledger::Standard) == direct, "ledger total differs on " + item.recipe.dump());
      } catch (const std::exception& e) {
        v.require(false, std::string("peel failed: ") + e.what());
      }
    }
  }
  v.detail << steps << " peel steps over " << components << " components checked exactly";
}

void stage_bounds(Verdict& v) {
  std::size_t single = 0;
  std::size_t components = 0;
  for (const auto& item : shared_k5_corpus()) {
    const auto out = colour_graph_with_reports(item.graph, 5);
    const auto comps = kk_components(item.graph, 5);
    if (comps.size() == 1) ++single;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      ++components;
      const auto& r = out.components[i];
      const std::int64_t b =
          2 * static_cast<std::int64_t>(comps[i].graph.size()) - 6 * static_cast<std::int64_t>(comps[i].graph.order()) + 10;
      v.require(b >= 0 && b < 10, "badness " + std::to_string(b) + " outside [0, 10)");
      const auto measured = check_stage(comps[i].graph, restrict(item.graph, out.colouring, comps[i]), 5);
      v.require(measured.has_value(), "rainbow K_5 left in a component of " + item.recipe.dump());
      if (!measured) continue;
      v.require(*measured == r.stage, "reported stage differs from the measured one");
      v.require(level(*measured) <= level(stage_bound(b, 5)),
                "stage " + to_string(*measured) + " above bound for b=" + std::to_string(b));
    }
  }
  v.detail << components << " components (" << single << " single-component inputs) within their stage bound";
}

void fixtures(Verdict& v) {
  const std::set<std::string> wanted{"X1", "X2", "X3", "Y1", "Y2", "Y3", "U1"};
  std::set<std::string> seen;
  for (const auto& f : figure1_fixtures(5)) {
    const auto got = classify_kv(split_neighbourhood(f.graph, *f.vertex, 5), f.graph);
    v.require(got == *f.expected_config, "expected " + f.expected_config->label() + ", got " + got.label());
    seen.insert(f.expected_config->label());
  }
  v.require(seen == wanted, "fixture labels are not the seven k=5 shapes");
  v.detail << seen.size() << " fixtures classified";
}

void witness(Verdict& v) {
  const auto j = witness_j();
  v.require(j == oracle::j_graph(), "J differs from the hand-built K_{3,4} plus triangle");
  v.require(max_density(j) == Rational(15, 7), "m(J) = " + max_density(j).to_string());
  v.require(oracle::max_density(j) == Rational(15, 7), "exhaustive m(J) differs");

  const auto t0 = Clock::now();
  const bool forced = forced_rainbow(j, 4);
  const double forced_time = seconds_since(t0);
  v.require(forced, "J admits a colouring without a rainbow K_4");
  v.require(forced_time <= 60.0, "forced_rainbow(J) took over 60 s");

  double worst = 0.0;
  std::size_t avoided = 0;
  for (std::size_t e = 0; e < j.size(); ++e) {
    std::vector<Edge> kept;
    for (std::size_t f = 0; f < j.size(); ++f)
      if (f != e) kept.push_back(j.edges()[f]);
    const Graph h(j.order(), kept);
    const auto t1 = Clock::now();
    const auto c = brute_force_no_rainbow_colouring(h, 4);
    worst = std::max(worst, seconds_since(t1));
    if (c && is_proper(h, *c) && !oracle::rainbow_clique(h, complete_colouring(h, *c).raw(), 4)) ++avoided;
  }
  v.require(avoided == 15 && j.size() == 15, std::to_string(avoided) + " of 15 deletions avoid a rainbow K_4");
  v.require(worst <= 60.0, "a deletion case took over 60 s");
  v.detail << std::fixed << std::setprecision(2) << "forced in " << forced_time << " s, m(J) = 15/7, " << avoided
           << "/15 deletions avoid (slowest " << worst << " s)";
}

void k4_suite(Verdict& v) {
  std::size_t components = 0;
  std::size_t steps = 0;
  for (const auto& item : shared_k4_corpus()) {
    for (const auto& comp : kk_components(item.graph, 4)) {
      ++components;
      const auto& h = comp.graph;
      const std::int64_t b = 7 * static_cast<std::int64_t>(h.size()) - 15 * static_cast<std::int64_t>(h.order()) + 18;
      v.require(b < 18, "b_K4 = " + std::to_string(b));
      v.require(h.order() <= 10, "component on " + std::to_string(h.order()) + " vertices");
      v.require(oracle::max_density(h) < Rational(15, 7), "component not sparse: " + item.recipe.dump());
      try {
        const auto r = anti_rainbow_colouring_k4(h);
        v.require(oracle::proper(h, r.colouring.raw()), "improper K_4 colouring");
        v.require(!oracle::rainbow_clique(h, complete_colouring(h, r.colouring).raw(), 4),
                  "rainbow K_4 in " + item.recipe.dump());
        const auto t = peel_trace_k4(h);
        std::function<void(const PeelTrace&)> walk = [&](const PeelTrace& tr) {
          for (const auto& s : tr.steps) {
            ++steps;
            const auto label = s.config.label();
            const std::int64_t expected = 7 * edges_at_r(s.config, 4) - 15 * s.config.ell;
            v.require(s.badness_delta == expected, label + " delta " + std::to_string(s.badness_delta));
            v.require((label == "X1" && expected == 6) || (label == "X2" && expected == 5) ||
                          (label == "U1" && expected == 13),
                      "unexpected K_4 step " + label);
          }
          for (const auto& br : tr.branches) walk(br);
        };
        walk(t);
        v.require(ledger_total(t, 4, Ledger::K4) == b, "K_4 ledger total differs");
      } catch (const std::exception& e) {
        v.require(false, std::string("K_4 colouring failed: ") + e.what());
      }
    }
  }
  v.require(components >= 2000, "only " + std::to_string(components) + " K_4-components");
  v.detail << components << " K_4-components, " << steps << " peel steps";
}

void oracle_cross_check(Verdict& v) {
  std::size_t checked = 0;
  std::size_t negatives = 0;
  auto compare = [&](const Graph& g, int k, const std::string& name) {
    if (g.size() > 18) return;
    ++checked;
    bool engine_ok = true;
    try {
      const auto c = k == 4 ? colour_graph_k4(g) : colour_graph(g, k);
      engine_ok = !find_rainbow_clique(g, complete_colouring(g, c), k).has_value();
    } catch (const std::exception&) {
      engine_ok = false;
    }
    const bool exists = brute_force_no_rainbow_colouring(g, k).has_value();
    if (!exists) ++negatives;
    v.require(engine_ok == exists, "disagreement on " + name);
  };
  for (const auto& item : shared_k5_corpus()) compare(item.graph, 5, item.recipe.dump());
  for (const auto& item : shared_k4_corpus()) compare(item.graph, 4, item.recipe.dump());
  for (const auto& f : figure1_fixtures(5)) compare(f.graph, 5, f.expected_config->label());
  // Controls outside the sparse corpus, where no avoiding colouring exists.
  const auto j = witness_j();
  compare(j, 4, "J");
  auto with_pendant = j.edges();
  with_pendant.push_back(make_edge(0, 7));
  compare(Graph(8, with_pendant), 4, "J plus a pendant edge");
  v.require(negatives >= 2, "no negative cases were exercised");
  v.detail << checked << " graphs with at most 18 edges agree (" << negatives << " forced)";
}

void density_oracle(Verdict& v) {
  std::size_t checked = 0;
  auto compare = [&](const Graph& g, const std::string& name) {
    if (g.order() == 0 || g.order() > 9) return;
    ++checked;
    v.require(max_density(g) == oracle::max_density(g), "max_density differs on " + name);
  };
  for (const auto* items : {&shared_k5_corpus(), &shared_k4_corpus()}) {
    for (const auto& item : *items) {
      compare(item.graph, item.recipe.dump());
      for (const int k : {4, 5})
        for (const auto& comp : kk_components(item.graph, k)) compare(comp.graph, item.recipe.dump());
    }
  }
  v.require(checked >= 1000, "only " + std::to_string(checked) + " graphs with v <= 9");
  v.detail << checked << " graphs with v <= 9 match the exhaustive scan";
}

void threshold_scan_check(Verdict& v) {
  const std::vector<double> grid{0.60, 0.55, 0.50, 0.45, 0.40, 0.35};
  const auto t0 = Clock::now();
  const auto rows = threshold_scan(4, 100, grid, 200, 2024);
  const double elapsed = seconds_since(t0);
  v.require(rows.size() == grid.size(), "scan returned the wrong number of rows");
  double previous = -1.0;
  for (const auto& r : rows) {
    const double rate = r.rate_j.value_or(-1.0);
    v.require(rate >= previous, "J rate drops from " + std::to_string(previous) + " to " + std::to_string(rate));
    previous = rate;
  }
  const double low = rows.front().rate_j.value_or(1.0);
  const double high = rows.back().rate_j.value_or(0.0);
  v.require(low <= 0.05, "J rate at c = 0.60 is " + std::to_string(low));
  v.require(high >= 0.95, "J rate at c = 0.35 is " + std::to_string(high));
  v.require(elapsed <= 300.0, "scan took over 5 minutes");
  v.detail << std::fixed << std::setprecision(3) << "J rate " << low << " at c=0.60, " << high << " at c=0.35, monotone over "
           << grid.size() << " exponents, " << std::setprecision(1) << elapsed << " s";
}

void census(Verdict& v) {
  const Rational threshold(15, 7);
  const Vertex n = 40;
  const double p = std::pow(static_cast<double>(n), -0.6);
  std::size_t empty = 0;
  std::vector<std::uint64_t> dense_seeds;
  const auto t0 = Clock::now();
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = gnp(n, p, seed);
    if (dense_subgraph_census(g, 12, threshold).empty()) {
      ++empty;
    } else {
      dense_seeds.push_back(seed);
    }
  }
  const double elapsed = seconds_since(t0);
  const auto on_j = dense_subgraph_census(witness_j(), 12, threshold);
  v.require(!on_j.empty(), "census of J is empty");
  v.require(empty >= 99, std::to_string(100 - empty) + " of 100 samples contain a set with e/v >= 15/7 on <= 12 vertices");
  v.detail << empty << "/100 samples empty, J gives " << on_j.size() << " set(s), " << std::fixed << std::setprecision(1)
           << elapsed << " s";
  if (!dense_seeds.empty()) {
    v.detail << "; non-empty seeds:";
    for (const auto s : dense_seeds) v.detail << ' ' << s;
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      only.insert(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--only N]...\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "soundness", soundness},
      {2, "ledger-exactness", ledger_exactness},
      {3, "stage-bounds", stage_bounds},
      {4, "configuration-fixtures", fixtures},
      {5, "witness-j", witness},
      {6, "k4-suite", k4_suite},
      {7, "oracle-cross-check", oracle_cross_check},
      {8, "density-oracle", density_oracle},
      {9, "threshold-scan", threshold_scan_check},
      {10, "census", census},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    Verdict v;
    try {
      c.body(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("uncaught: ") + e.what());
    }
    std::cout << (v.pass ? "PASS" : "FAIL") << " [" << std::setw(2) << c.id << "] " << c.name << ": " << v.detail.str()
              << '\n';
    for (const auto& p : v.problems) std::cout << "       - " << p << '\n';
    std::cout.flush();
    if (!v.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
