#include "antiramsey/corpus.hpp"

#include <algorithm>
#include <numeric>

#include "antiramsey/cliques.hpp"
#include "antiramsey/density.hpp"
#include "antiramsey/errors.hpp"
#include "antiramsey/random.hpp"

namespace antiramsey {

namespace {

constexpr int kMaxAttempts = 2000;

struct Builder {
  Vertex n = 0;
  std::vector<Edge> edges;

  Vertex add_vertices(int count) {
    const Vertex first = n;
    n += count;
    return first;
  }
  void add_clique(const VertexSet& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) edges.push_back(make_edge(vs[i], vs[j]));
  }
  [[nodiscard]] Graph graph() const { return Graph(n, edges); }
};

VertexSet range_set(Vertex first, int count) {
  VertexSet out(static_cast<std::size_t>(count));
  std::iota(out.begin(), out.end(), first);
  return out;
}

VertexSet sample_subset(const VertexSet& from, int size, StreamRng& rng) {
  VertexSet pool = from;
  rng.shuffle(pool);
  pool.resize(static_cast<std::size_t>(size));
  std::sort(pool.begin(), pool.end());
  return pool;
}

Rational sparse_ceiling(int k) { return k == 4 ? Rational(15, 7) : density_ceiling(k); }
std::int64_t ledger_ceiling(int k) { return k == 4 ? 18 : 2 * static_cast<std::int64_t>(k); }

std::int64_t attachment_delta(const KvConfig& c, int k) {
  if (k == 4) return 7 * expected_edge_delta(c, k) - 15 * c.ell;
  return expected_badness_delta(c, k);
}

void check_k(int k) {
  if (k < 4 || k > 12) throw DomainError("corpus generators support 4 <= k <= 12");
}

Graph maybe_relabel(const Graph& g, bool enabled, StreamRng& rng) {
  if (!enabled) return g;
  std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  return relabel(g, perm);
}

nlohmann::json make_recipe(CorpusKind kind, int k, std::uint64_t seed, std::size_t index, const CorpusParams& p) {
  return {{"kind", to_string(kind)}, {"k", k}, {"seed", seed}, {"index", index}, {"params", p.to_json()}};
}

CorpusItem clique_chain_item(int k, const CorpusParams& p, StreamRng& rng) {
  int max_length = p.max_length;
  if (k == 4) max_length = std::min(max_length, 4);  // each link adds 5 to the K_4 ledger
  const int length = p.length > 0 ? p.length : static_cast<int>(rng.between(2, std::max(2, max_length)));
  if (k == 4 && 5 * (length - 1) >= 18) throw DomainError("a K_4 chain of length " + std::to_string(length) + " is too dense");

  Builder b;
  std::vector<VertexSet> cliques{range_set(b.add_vertices(k), k)};
  std::vector<std::vector<bool>> used{std::vector<bool>(static_cast<std::size_t>(k), false)};
  for (int i = 1; i < length; ++i) {
    std::vector<std::size_t> parents;
    if (p.tree) {
      parents.resize(cliques.size());
      std::iota(parents.begin(), parents.end(), 0);
      rng.shuffle(parents);
    } else {
      parents.push_back(cliques.size() - 1);
    }
    bool placed = false;
    for (const auto parent : parents) {
      std::vector<int> free;
      for (int j = 0; j < k; ++j)
        if (!used[parent][j]) free.push_back(j);
      if (free.size() < 2) continue;
      rng.shuffle(free);
      used[parent][free[0]] = used[parent][free[1]] = true;
      VertexSet next = range_set(b.add_vertices(k - 2), k - 2);
      next.push_back(cliques[parent][free[0]]);
      next.push_back(cliques[parent][free[1]]);
      std::sort(next.begin(), next.end());
      std::vector<bool> next_used(static_cast<std::size_t>(k), false);
      for (int j = 0; j < k; ++j)
        if (next[j] == cliques[parent][free[0]] || next[j] == cliques[parent][free[1]]) next_used[j] = true;
      cliques.push_back(next);
      used.push_back(next_used);
      placed = true;
      break;
    }
    if (!placed) throw DomainError("no free edge left to extend the clique chain");
  }
  for (const auto& q : cliques) b.add_clique(q);
  CorpusItem item;
  item.graph = maybe_relabel(b.graph(), p.relabel, rng);
  item.predicted_badness = k == 4 ? 5 * static_cast<std::int64_t>(length - 1) : 0;
  return item;
}

/// Pairs of k-cliques sharing k-1 vertices whose two private vertices are not
/// adjacent; their union induces K_{k+1} minus an edge.
struct NearPair {
  VertexSet common;
  Vertex x = 0;
  Vertex y = 0;
};

std::vector<NearPair> near_pairs(const Graph& g, const std::vector<VertexSet>& cliques, int k) {
  std::vector<NearPair> out;
  for (std::size_t a = 0; a < cliques.size(); ++a) {
    for (std::size_t b = a + 1; b < cliques.size(); ++b) {
      VertexSet common;
      std::set_intersection(cliques[a].begin(), cliques[a].end(), cliques[b].begin(), cliques[b].end(),
                            std::back_inserter(common));
      if (static_cast<int>(common.size()) != k - 1) continue;
      Vertex x = -1;
      Vertex y = -1;
      for (const Vertex w : cliques[a])
        if (!std::binary_search(common.begin(), common.end(), w)) x = w;
      for (const Vertex w : cliques[b])
        if (!std::binary_search(common.begin(), common.end(), w)) y = w;
      if (!g.adjacent(x, y)) out.push_back({common, std::min(x, y), std::max(x, y)});
    }
  }
  return out;
}

std::vector<KvConfig> attachment_menu(int k) {
  std::vector<KvConfig> menu;
  for (int l = 1; l <= k - 2; ++l) menu.push_back({ConfigKind::X, l});
  menu.push_back({ConfigKind::U, 1});
  if (k >= 5)
    for (int l = 1; l <= k - 2; ++l) menu.push_back({ConfigKind::Y, l});
  return menu;
}

/// Applies one attachment; returns false when the graph offers no place for it.
bool attach(Builder& b, const KvConfig& c, int k, StreamRng& rng) {
  const Graph g = b.graph();
  const auto cliques = enumerate_cliques(g, k);
  VertexSet shared;
  if (c.kind == ConfigKind::Y) {
    const auto pairs = near_pairs(g, cliques, k);
    if (pairs.empty()) return false;
    const auto& pick = pairs[rng.below(pairs.size())];
    shared = sample_subset(pick.common, k - c.ell - 1, rng);
    shared.push_back(pick.x);
    shared.push_back(pick.y);
  } else {
    if (cliques.empty()) return false;
    const auto& host = cliques[rng.below(cliques.size())];
    shared = c.kind == ConfigKind::U ? host : sample_subset(host, k - c.ell, rng);
  }
  const VertexSet fresh = range_set(b.add_vertices(c.ell), c.ell);
  b.add_clique(fresh);
  for (const Vertex r : fresh)
    for (const Vertex s : shared) b.edges.push_back(make_edge(r, s));
  return true;
}

CorpusItem gluing_mix_item(int k, const CorpusParams& p, StreamRng& rng) {
  const auto menu = attachment_menu(k);
  const std::int64_t ceiling = ledger_ceiling(k);
  std::vector<KvConfig> fixed;
  for (const auto& label : p.sequence) {
    const auto c = KvConfig::parse(label);
    if (std::find(menu.begin(), menu.end(), c) == menu.end()) {
      throw DomainError("attachment " + label + " is not available for k = " + std::to_string(k));
    }
    fixed.push_back(c);
  }
  if (!fixed.empty()) {
    std::int64_t total = 0;
    for (const auto& c : fixed) total += attachment_delta(c, k);
    if (total >= ceiling) {
      throw DomainError("attachment sequence reaches ledger " + std::to_string(total) + " >= " +
                        std::to_string(ceiling));
    }
  }

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Builder b;
    b.add_clique(range_set(b.add_vertices(k), k));
    std::int64_t ledger = 0;
    std::vector<std::string> applied;
    bool ok = true;
    if (!fixed.empty()) {
      for (const auto& c : fixed) {
        if (!attach(b, c, k, rng)) {
          ok = false;
          break;
        }
        ledger += attachment_delta(c, k);
        applied.push_back(c.label());
      }
    } else {
      const int steps = p.steps > 0 ? p.steps : static_cast<int>(rng.between(1, std::max(1, p.max_steps)));
      for (int s = 0; s < steps; ++s) {
        std::vector<KvConfig> options;
        for (const auto& c : menu)
          if (ledger + attachment_delta(c, k) < ceiling) options.push_back(c);
        rng.shuffle(options);
        bool placed = false;
        for (const auto& c : options) {
          if (attach(b, c, k, rng)) {
            ledger += attachment_delta(c, k);
            applied.push_back(c.label());
            placed = true;
            break;
          }
        }
        if (!placed) break;
      }
    }
    if (!ok) continue;
    const Graph g = b.graph();
    if (!is_single_kk_component(g, k) || !components_sparse(g, k)) continue;
    CorpusItem item;
    item.graph = maybe_relabel(g, p.relabel, rng);
    item.predicted_badness = ledger;
    item.recipe["attachments"] = applied;
    return item;
  }
  throw DomainError("gluing-mix found no admissible graph after " + std::to_string(kMaxAttempts) + " attempts");
}

CorpusItem random_sparse_item(int k, const CorpusParams& p, StreamRng& rng) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const int pool = p.pool > 0 ? p.pool : static_cast<int>(rng.between(k + 1, 3 * k));
    if (pool < k) throw DomainError("pool smaller than k");
    const int planted = p.planted > 0 ? p.planted : static_cast<int>(rng.between(1, 4));
    const double noise = p.noise > 0.0 ? p.noise : 0.08;
    Builder b;
    b.add_vertices(pool);
    const VertexSet all = range_set(0, pool);
    for (int i = 0; i < planted; ++i) b.add_clique(sample_subset(all, k, rng));
    for (Vertex u = 0; u < pool; ++u)
      for (Vertex v = u + 1; v < pool; ++v)
        if (rng.chance(noise)) b.edges.push_back({u, v});
    const Graph g = b.graph();
    if (enumerate_cliques(g, k).empty() || !components_sparse(g, k)) continue;
    CorpusItem item;
    item.graph = maybe_relabel(g, p.relabel, rng);
    return item;
  }
  throw DomainError("random-sparse found no admissible graph after " + std::to_string(kMaxAttempts) + " attempts");
}

CorpusItem generate(CorpusKind kind, int k, const CorpusParams& p, std::uint64_t seed, std::size_t index) {
  StreamRng rng({seed, static_cast<std::uint64_t>(kind), static_cast<std::uint64_t>(k), index});
  CorpusItem item;
  switch (kind) {
    case CorpusKind::CliqueChain: item = clique_chain_item(k, p, rng); break;
    case CorpusKind::GluingMix: item = gluing_mix_item(k, p, rng); break;
    case CorpusKind::RandomSparse: item = random_sparse_item(k, p, rng); break;
    case CorpusKind::Figure1Fixtures: {
      auto all = figure1_fixtures(k);
      if (index >= all.size()) throw DomainError("fixture index out of range");
      return all[index];
    }
  }
  auto extra = item.recipe;
  item.recipe = make_recipe(kind, k, seed, index, p);
  if (extra.is_object())
    for (auto& [key, value] : extra.items()) item.recipe[key] = value;
  return item;
}

}  // namespace

std::string to_string(CorpusKind kind) {
  switch (kind) {
    case CorpusKind::CliqueChain: return "clique-chain";
    case CorpusKind::Figure1Fixtures: return "figure1-fixtures";
    case CorpusKind::RandomSparse: return "random-sparse";
    case CorpusKind::GluingMix: return "gluing-mix";
  }
  return "unknown";
}

CorpusKind parse_corpus_kind(const std::string& name) {
  for (const auto kind : {CorpusKind::CliqueChain, CorpusKind::Figure1Fixtures, CorpusKind::RandomSparse,
                          CorpusKind::GluingMix}) {
    if (to_string(kind) == name) return kind;
  }
  throw DomainError("unknown corpus kind '" + name + "'");
}

nlohmann::json CorpusParams::to_json() const {
  return {{"count", count}, {"length", length}, {"maxLength", max_length}, {"tree", tree},
          {"steps", steps}, {"maxSteps", max_steps}, {"sequence", sequence}, {"pool", pool},
          {"planted", planted}, {"noise", noise}, {"relabel", relabel}};
}

CorpusParams CorpusParams::from_json(const nlohmann::json& j) {
  CorpusParams p;
  p.count = j.value("count", p.count);
  p.length = j.value("length", p.length);
  p.max_length = j.value("maxLength", p.max_length);
  p.tree = j.value("tree", p.tree);
  p.steps = j.value("steps", p.steps);
  p.max_steps = j.value("maxSteps", p.max_steps);
  p.sequence = j.value("sequence", p.sequence);
  p.pool = j.value("pool", p.pool);
  p.planted = j.value("planted", p.planted);
  p.noise = j.value("noise", p.noise);
  p.relabel = j.value("relabel", p.relabel);
  return p;
}

std::vector<CorpusItem> corpus(CorpusKind kind, int k, const CorpusParams& params, std::uint64_t seed) {
  check_k(k);
  if (kind == CorpusKind::Figure1Fixtures) return figure1_fixtures(k);
  std::vector<CorpusItem> out;
  out.reserve(params.count);
  for (std::size_t i = 0; i < params.count; ++i) out.push_back(generate(kind, k, params, seed, i));
  return out;
}

CorpusItem regenerate(const nlohmann::json& recipe) {
  const auto kind = parse_corpus_kind(recipe.at("kind").get<std::string>());
  const int k = recipe.at("k").get<int>();
  check_k(k);
  const auto params = CorpusParams::from_json(recipe.value("params", nlohmann::json::object()));
  return generate(kind, k, params, recipe.value("seed", std::uint64_t{0}), recipe.at("index").get<std::size_t>());
}

std::vector<CorpusItem> figure1_fixtures(int k) {
  if (k < 4) throw DomainError("fixtures need k >= 4");
  std::vector<CorpusItem> out;
  auto push = [&](Builder& b, const KvConfig& c) {
    CorpusItem item;
    item.graph = b.graph();
    item.predicted_badness = corpus_ledger(item.graph, k);
    item.expected_config = c;
    item.vertex = 0;
    item.recipe = {{"kind", to_string(CorpusKind::Figure1Fixtures)},
                   {"k", k},
                   {"index", out.size()},
                   {"config", c.label()}};
    out.push_back(std::move(item));
  };
  // X_l: two K_k's sharing K_{k-l}; v = 0 among the l private vertices.
  for (int l = 1; l <= k - 2; ++l) {
    Builder b;
    const VertexSet r = range_set(b.add_vertices(l), l);
    const VertexSet s = range_set(b.add_vertices(k - l), k - l);
    const VertexSet t = range_set(b.add_vertices(l), l);
    VertexSet left = r;
    left.insert(left.end(), s.begin(), s.end());
    VertexSet right = s;
    right.insert(right.end(), t.begin(), t.end());
    b.add_clique(left);
    b.add_clique(right);
    push(b, {ConfigKind::X, l});
  }
  // Y_l: cliques R and T on l vertices each, both joined to S = K_{k-l+1}^-.
  for (int l = 1; l <= k - 2; ++l) {
    Builder b;
    const VertexSet r = range_set(b.add_vertices(l), l);
    const VertexSet s = range_set(b.add_vertices(k - l + 1), k - l + 1);
    const VertexSet t = range_set(b.add_vertices(l), l);
    b.add_clique(r);
    b.add_clique(t);
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (j + 1 != s.size() || i + 2 != s.size()) b.edges.push_back({s[i], s[j]});
    for (const Vertex x : s) {
      for (const Vertex y : r) b.edges.push_back(make_edge(x, y));
      for (const Vertex y : t) b.edges.push_back(make_edge(x, y));
    }
    push(b, {ConfigKind::Y, l});
  }
  Builder u;
  u.add_clique(range_set(u.add_vertices(k + 1), k + 1));
  push(u, {ConfigKind::U, 1});
  return out;
}

std::int64_t corpus_ledger(const Graph& g, int k) {
  if (k == 4) return 7 * static_cast<std::int64_t>(g.size()) - 15 * static_cast<std::int64_t>(g.order()) + 18;
  return badness(g, k);
}

bool components_sparse(const Graph& g, int k) {
  const auto ceiling = sparse_ceiling(k);
  for (const auto& part : kk_components(g, k))
    if (max_density(part.graph) >= ceiling) return false;
  return true;
}

}  // namespace antiramsey
