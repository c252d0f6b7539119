#include "antiramsey/structure.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "antiramsey/density.hpp"
#include "antiramsey/errors.hpp"

namespace antiramsey {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

std::string describe(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

bool contains(const VertexSet& sorted, Vertex v) { return std::binary_search(sorted.begin(), sorted.end(), v); }

std::int64_t ledger_value(const Graph& g, int k, Ledger ledger) {
  if (ledger == Ledger::K4) {
    return 7 * static_cast<std::int64_t>(g.size()) - 15 * static_cast<std::int64_t>(g.order()) + 18;
  }
  return badness(g, k);
}

std::int64_t expected_k4_delta(const KvConfig& c) {
  if (c == KvConfig{ConfigKind::X, 1}) return 6;
  if (c == KvConfig{ConfigKind::X, 2}) return 5;
  if (c == KvConfig{ConfigKind::U, 1}) return 13;
  throw InvariantViolation("configuration " + c.label() + " cannot occur in a K_4-component below density 15/7");
}

PeelTrace peel_subgraph(const Subgraph& start, int k, Ledger ledger) {
  PeelTrace trace;
  Subgraph current = start;
  while (true) {
    const Graph& g = current.graph;
    if (g.order() <= k) {
      if (g.order() != k || !is_complete(g)) {
        throw InvariantViolation("peel residue on " + std::to_string(g.order()) + " vertices with " +
                                 std::to_string(g.size()) + " edges is not a K_" + std::to_string(k));
      }
      trace.residue = current.to_parent;
      return trace;
    }
    const Vertex v = min_degree_vertex(g);
    const auto split = split_neighbourhood(g, v, k);
    if (split.private_part.size() > static_cast<std::size_t>(k - 1)) {
      throw InvariantViolation("R(v) has " + std::to_string(split.private_part.size()) + " > k-1 vertices at v=" +
                               std::to_string(current.parent(v)));
    }
    KvConfig config;
    try {
      config = classify_kv(split, g);
    } catch (const ClassificationError& e) {
      throw InvariantViolation("peel at v=" + std::to_string(current.parent(v)) + ": " + e.what());
    }
    auto red = reduce(g, split, k);

    PeelStep step;
    step.v = current.parent(v);
    step.config = config;
    step.edge_delta = static_cast<std::int64_t>(g.size()) - static_cast<std::int64_t>(red.star.graph.size());
    step.extra_edges = static_cast<std::int64_t>(red.extra_edges);
    if (step.edge_delta != expected_edge_delta(config, k)) {
      throw InvariantViolation("edge delta " + std::to_string(step.edge_delta) + " != closed form for " +
                               config.label() + " at v=" + std::to_string(step.v));
    }
    std::int64_t expected = 0;
    if (ledger == Ledger::Standard) {
      step.badness_delta = badness(g, k) - badness(red.star.graph, k);
      expected = expected_badness_delta(config, k);
    } else {
      step.badness_delta =
          ledger_value(g, k, ledger) - ledger_value(red.reduced, k, ledger) - 7 * step.extra_edges;
      expected = expected_k4_delta(config);
    }
    if (step.badness_delta != expected) {
      throw InvariantViolation("badness delta " + std::to_string(step.badness_delta) + " != " +
                               std::to_string(expected) + " for " + config.label() + " at v=" +
                               std::to_string(step.v));
    }
    trace.steps.push_back(step);

    const Subgraph reduced_in_root{red.reduced, compose(current, red.star).to_parent};
    auto parts = kk_components(red.reduced, k);
    if (parts.size() == 1 && parts.front().graph.order() == red.reduced.order()) {
      current = compose(reduced_in_root, parts.front());
      continue;
    }
    if (parts.empty()) throw InvariantViolation("G_v contains no K_k after peeling " + std::to_string(step.v));
    std::int64_t total_order = 0;
    for (const auto& part : parts) {
      total_order += part.graph.order();
      trace.branches.push_back(peel_subgraph(compose(reduced_in_root, part), k, ledger));
    }
    trace.overlap = total_order - red.reduced.order();
    return trace;
  }
}

}  // namespace

std::int64_t badness(const Graph& g, int k) {
  return 2 * static_cast<std::int64_t>(g.size()) - static_cast<std::int64_t>(k + 1) * g.order() + 2 * k;
}

std::string KvConfig::label() const {
  const char prefix = kind == ConfigKind::X ? 'X' : kind == ConfigKind::Y ? 'Y' : 'U';
  return prefix + std::to_string(ell);
}

KvConfig KvConfig::parse(const std::string& label) {
  if (label.size() < 2) throw DomainError("bad configuration label '" + label + "'");
  KvConfig c;
  switch (label[0]) {
    case 'X': c.kind = ConfigKind::X; break;
    case 'Y': c.kind = ConfigKind::Y; break;
    case 'U': c.kind = ConfigKind::U; break;
    default: throw DomainError("bad configuration label '" + label + "'");
  }
  try {
    c.ell = std::stoi(label.substr(1));
  } catch (const std::exception&) {
    throw DomainError("bad configuration label '" + label + "'");
  }
  return c;
}

std::vector<Subgraph> kk_components(const Graph& g, int k) {
  const auto cliques = enumerate_cliques(g, k);
  const auto edge_ids = clique_edge_ids(g, cliques);
  UnionFind uf(cliques.size());
  std::vector<std::ptrdiff_t> owner(g.size(), -1);
  for (std::size_t c = 0; c < cliques.size(); ++c) {
    for (const auto e : edge_ids[c]) {
      if (owner[e] < 0) {
        owner[e] = static_cast<std::ptrdiff_t>(c);
      } else {
        uf.unite(static_cast<std::size_t>(owner[e]), c);
      }
    }
  }
  std::vector<std::ptrdiff_t> slot(cliques.size(), -1);
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t c = 0; c < cliques.size(); ++c) {
    const auto root = uf.find(c);
    if (slot[root] < 0) {
      slot[root] = static_cast<std::ptrdiff_t>(groups.size());
      groups.emplace_back();
    }
  }
  for (std::size_t e = 0; e < g.size(); ++e) {
    if (owner[e] >= 0) groups[slot[uf.find(static_cast<std::size_t>(owner[e]))]].push_back(e);
  }
  std::vector<Subgraph> out;
  out.reserve(groups.size());
  for (const auto& ids : groups) out.push_back(edge_subgraph(g, ids));
  return out;
}

bool is_single_kk_component(const Graph& g, int k) {
  const auto parts = kk_components(g, k);
  return parts.size() == 1 && parts.front().graph.order() == g.order() && parts.front().graph.size() == g.size();
}

Vertex min_degree_vertex(const Graph& g) {
  if (g.order() == 0) throw DomainError("minimum degree of the empty graph is undefined");
  Vertex best = 0;
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) < g.degree(best)) best = v;
  return best;
}

NeighbourhoodSplit split_neighbourhood(const Graph& g, Vertex v, int k) {
  if (v < 0 || v >= g.order()) throw DomainError("vertex " + std::to_string(v) + " out of range");
  const auto cliques = enumerate_cliques(g, k);
  std::vector<bool> vertex_covered(static_cast<std::size_t>(g.order()), false);
  std::vector<bool> edge_covered(g.size(), false);
  // Vertices that lie in some K_k avoiding v.
  std::vector<bool> escapes(static_cast<std::size_t>(g.order()), false);
  for (const auto& q : cliques) {
    const bool has_v = contains(q, v);
    for (std::size_t i = 0; i < q.size(); ++i) {
      vertex_covered[q[i]] = true;
      if (!has_v) escapes[q[i]] = true;
      for (std::size_t j = i + 1; j < q.size(); ++j) edge_covered[g.edge_id(q[i], q[j])] = true;
    }
  }
  for (Vertex x = 0; x < g.order(); ++x) {
    if (!vertex_covered[x]) throw DomainError("vertex " + std::to_string(x) + " lies in no K_" + std::to_string(k));
  }
  for (std::size_t e = 0; e < g.size(); ++e) {
    if (!edge_covered[e]) {
      throw DomainError("edge {" + std::to_string(g.edges()[e].u) + "," + std::to_string(g.edges()[e].v) +
                        "} lies in no K_" + std::to_string(k));
    }
  }
  NeighbourhoodSplit split;
  split.v = v;
  split.k = k;
  split.closed.push_back(v);
  for (const Vertex w : g.neighbours(v)) split.closed.push_back(w);
  std::sort(split.closed.begin(), split.closed.end());
  for (const Vertex w : split.closed) {
    (w == v || !escapes[w] ? split.private_part : split.shared_part).push_back(w);
  }
  return split;
}

KvConfig classify_kv(const NeighbourhoodSplit& split, const Graph& g) {
  const int k = split.k;
  const auto closed_size = static_cast<std::int64_t>(split.closed.size());
  const auto closed_edges = static_cast<std::int64_t>(g.induced_edge_count(split.closed));
  const auto r = static_cast<std::int64_t>(split.private_part.size());
  const auto s = static_cast<std::int64_t>(split.shared_part.size());
  const auto r_edges = static_cast<std::int64_t>(g.induced_edge_count(split.private_part));
  const auto s_edges = static_cast<std::int64_t>(g.induced_edge_count(split.shared_part));
  const std::string where = " (v=" + std::to_string(split.v) + ", K(v)=" + describe(split.closed) +
                            ", R(v)=" + describe(split.private_part) + ")";

  if (r_edges != choose2(r)) throw ClassificationError("R(v) is not complete" + where);

  if (closed_size == k && closed_edges == choose2(k)) {
    if (r < 1 || r > k - 2) throw ClassificationError("X configuration needs 1 <= |R(v)| <= k-2" + where);
    return {ConfigKind::X, static_cast<int>(r)};
  }
  if (closed_size == k + 1 && closed_edges == choose2(k + 1)) {
    if (r != 1) throw ClassificationError("K(v) = K_{k+1} but |R(v)| != 1" + where);
    return {ConfigKind::U, 1};
  }
  if (closed_size == k + 1 && closed_edges == choose2(k + 1) - 1) {
    if (r < 1 || r > k - 2) throw ClassificationError("Y configuration needs 1 <= |R(v)| <= k-2" + where);
    if (s_edges != choose2(s) - 1) throw ClassificationError("missing edge of K(v) is not inside S(v)" + where);
    return {ConfigKind::Y, static_cast<int>(r)};
  }
  throw ClassificationError("K(v) has " + std::to_string(closed_size) + " vertices and " +
                            std::to_string(closed_edges) + " edges, none of K_k, K_{k+1}^-, K_{k+1}" + where);
}

Reduction reduce(const Graph& g, const NeighbourhoodSplit& split, int k) {
  VertexSet keep;
  for (Vertex x = 0; x < g.order(); ++x)
    if (!contains(split.private_part, x)) keep.push_back(x);
  Reduction red;
  red.star = induced_subgraph(g, keep);
  const auto& star = red.star.graph;
  std::vector<bool> covered(star.size(), false);
  const auto cliques = enumerate_cliques(star, k);
  for (const auto& ids : clique_edge_ids(star, cliques))
    for (const auto e : ids) covered[e] = true;
  std::vector<Edge> kept;
  for (std::size_t e = 0; e < star.size(); ++e)
    if (covered[e]) kept.push_back(star.edges()[e]);
  red.extra_edges = star.size() - kept.size();
  red.reduced = Graph(star.order(), std::move(kept));
  return red;
}

std::int64_t expected_edge_delta(const KvConfig& c, int k) {
  const std::int64_t l = c.ell;
  switch (c.kind) {
    case ConfigKind::U: return k;
    case ConfigKind::X: return choose2(l) + l * (k - l);
    case ConfigKind::Y: return choose2(l) + l * (k - l + 1);
  }
  return 0;
}

std::int64_t expected_badness_delta(const KvConfig& c, int k) {
  const std::int64_t l = c.ell;
  switch (c.kind) {
    case ConfigKind::U: return k - 1;
    case ConfigKind::X: return (k - l - 2) * l;
    case ConfigKind::Y: return (k - l) * l;
  }
  return 0;
}

std::size_t PeelTrace::total_steps() const {
  std::size_t n = steps.size();
  for (const auto& b : branches) n += b.total_steps();
  return n;
}

PeelTrace peel_with_ledger(const Graph& g, int k, Ledger ledger) {
  Subgraph root{g, {}};
  root.to_parent.resize(static_cast<std::size_t>(g.order()));
  std::iota(root.to_parent.begin(), root.to_parent.end(), 0);
  return peel_subgraph(root, k, ledger);
}

PeelTrace peel_trace(const Graph& g, int k) {
  if (k < 5) throw DomainError("peel_trace needs k >= 5; K_4 has its own ledger");
  if (!is_single_kk_component(g, k)) throw DomainError("input is not a single K_" + std::to_string(k) + "-component");
  const auto densest = densest_subgraph(g);
  if (densest.density >= density_ceiling(k)) {
    throw DensityViolation("m(G) = " + densest.density.to_string() + " >= " + density_ceiling(k).to_string(),
                           densest.vertices, densest.density);
  }
  return peel_with_ledger(g, k, Ledger::Standard);
}

std::int64_t ledger_total(const PeelTrace& trace, int k, Ledger ledger) {
  const std::int64_t per_extra = ledger == Ledger::K4 ? 7 : 2;
  const std::int64_t per_component = ledger == Ledger::K4 ? 18 : 2 * k;
  const std::int64_t per_vertex = ledger == Ledger::K4 ? 15 : k + 1;
  std::int64_t total = 0;
  for (const auto& s : trace.steps) total += s.badness_delta + per_extra * s.extra_edges;
  if (!trace.branches.empty()) {
    for (const auto& b : trace.branches) total += ledger_total(b, k, ledger);
    total -= per_component * static_cast<std::int64_t>(trace.branches.size() - 1);
    total += per_vertex * trace.overlap;
  }
  return total;
}

nlohmann::json to_json(const PeelTrace& trace) {
  auto steps = nlohmann::json::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"v", s.v},
                     {"config", s.config.label()},
                     {"edgeDelta", s.edge_delta},
                     {"extraEdges", s.extra_edges},
                     {"bDelta", s.badness_delta}});
  }
  nlohmann::json out = {{"steps", std::move(steps)}};
  if (trace.branches.empty()) {
    out["residue"] = trace.residue;
  } else {
    auto branches = nlohmann::json::array();
    for (const auto& b : trace.branches) branches.push_back(to_json(b));
    out["branches"] = std::move(branches);
    out["overlap"] = trace.overlap;
  }
  return out;
}

bool clique_chains_acyclic(const Graph& g, int k) {
  const auto cliques = enumerate_cliques(g, k);
  const auto edge_ids = clique_edge_ids(g, cliques);
  std::vector<std::vector<std::size_t>> holders(g.size());
  for (std::size_t c = 0; c < cliques.size(); ++c)
    for (const auto e : edge_ids[c]) holders[e].push_back(c);
  UnionFind uf(cliques.size() + g.size());
  for (std::size_t e = 0; e < g.size(); ++e) {
    if (holders[e].size() < 2) continue;
    for (const auto c : holders[e]) {
      if (!uf.unite(c, cliques.size() + e)) return false;
    }
  }
  return true;
}

}  // namespace antiramsey
