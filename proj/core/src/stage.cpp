#include "antiramsey/stage.hpp"

#include <algorithm>

#include "antiramsey/errors.hpp"

namespace antiramsey {

std::string to_string(Stage s) { return "P" + std::to_string(level(s)); }

Stage parse_stage(const std::string& text) {
  if (text.size() == 2 && text[0] == 'P' && text[1] >= '0' && text[1] <= '4') return stage_from_level(text[1] - '0');
  throw DomainError("unknown stage '" + text + "'");
}

Stage stage_bound(std::int64_t b, int k) {
  if (b < 0 || b >= 2 * static_cast<std::int64_t>(k)) {
    throw DomainError("badness " + std::to_string(b) + " outside [0, " + std::to_string(2 * k) + ")");
  }
  if (b < k - 3) return Stage::P0;
  if (b < k - 1) return Stage::P1;
  if (b < k + 1) return Stage::P2;
  if (b < 2 * k - 2) return Stage::P3;
  return Stage::P4;
}

Stage jmin_stage(std::int64_t b_sum, int k) {
  if (b_sum < k - 3) return Stage::P0;
  if (b_sum < k - 1) return Stage::P1;
  if (b_sum < k) return Stage::P2;
  if (b_sum < 2 * k - 2) return Stage::P3;
  throw DomainError("component ledger sum " + std::to_string(b_sum) + " >= 2k-2 contradicts b(G) < 2k");
}

namespace {

bool sorted_contains(const std::vector<Vertex>& v, Vertex x) { return std::binary_search(v.begin(), v.end(), x); }
bool sorted_contains(const std::vector<Colour>& v, Colour x) { return std::binary_search(v.begin(), v.end(), x); }

template <class T>
void sorted_insert(std::vector<T>& v, T x) {
  v.insert(std::upper_bound(v.begin(), v.end(), x), x);
}

/// Counts coloured edges on 4-sets reachable from a seed edge through coloured
/// adjacency. Every 4-set spanning 4 or more coloured edges is connected, so
/// seeding from each coloured edge (or each new edge) misses nothing that can
/// exceed 3.
class FourSetScanner {
 public:
  FourSetScanner(const Graph& g, const StageEvaluator::State& s, std::span<const EdgePaint> paints)
      : g_(g), s_(s), paints_(paints) {}

  [[nodiscard]] bool coloured(Vertex a, Vertex b) const {
    if (sorted_contains(s_.coloured_adj[a], b)) return true;
    for (const auto& p : paints_) {
      const Edge& e = g_.edges()[p.edge];
      if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return true;
    }
    return false;
  }

  void neighbours(Vertex a, std::vector<Vertex>& out) const {
    out.insert(out.end(), s_.coloured_adj[a].begin(), s_.coloured_adj[a].end());
    for (const auto& p : paints_) {
      const Edge& e = g_.edges()[p.edge];
      if (e.u == a) out.push_back(e.v);
      if (e.v == a) out.push_back(e.u);
    }
  }

  [[nodiscard]] int best_from(Vertex a, Vertex b) const {
    std::vector<Vertex> third;
    neighbours(a, third);
    neighbours(b, third);
    std::sort(third.begin(), third.end());
    third.erase(std::unique(third.begin(), third.end()), third.end());
    int best = 1;
    std::vector<Vertex> fourth;
    for (const Vertex c : third) {
      if (c == a || c == b) continue;
      const int abc = 1 + coloured(a, c) + coloured(b, c);
      best = std::max(best, abc);
      fourth.assign(third.begin(), third.end());
      neighbours(c, fourth);
      for (const Vertex d : fourth) {
        if (d == a || d == b || d <= c) continue;
        best = std::max(best, abc + coloured(a, d) + coloured(b, d) + coloured(c, d));
        if (best == 6) return best;
      }
    }
    return best;
  }

 private:
  const Graph& g_;
  const StageEvaluator::State& s_;
  std::span<const EdgePaint> paints_;
};

}  // namespace

StageEvaluator::StageEvaluator(const Graph& g, int k) : g_(&g), k_(k) {
  cliques_ = enumerate_cliques(g, k);
  clique_edges_ = clique_edge_ids(g, cliques_);
  edge_cliques_.resize(g.size());
  for (std::size_t q = 0; q < cliques_.size(); ++q)
    for (const auto e : clique_edges_[q]) edge_cliques_[e].push_back(static_cast<std::uint32_t>(q));
  std::vector<std::uint32_t> shared(cliques_.size(), 0);
  for (std::size_t q = 0; q < cliques_.size() && nearly_disjoint_; ++q) {
    std::fill(shared.begin(), shared.end(), 0);
    for (const auto e : clique_edges_[q]) {
      for (const auto r : edge_cliques_[e]) {
        if (r > q && ++shared[r] >= 2) {
          nearly_disjoint_ = false;
          break;
        }
      }
      if (!nearly_disjoint_) break;
    }
  }
}

StageEvaluator::State StageEvaluator::prepare(const Colouring& c) const {
  const Graph& g = *g_;
  require_proper(g, c);
  State s;
  s.colouring = c;
  s.vertex_colours.resize(static_cast<std::size_t>(g.order()));
  s.coloured_adj.resize(static_cast<std::size_t>(g.order()));
  s.multiplicity.assign(static_cast<std::size_t>(c.max_colour()) + 1, 0);
  for (std::size_t e = 0; e < g.size(); ++e) {
    if (!c.is_coloured(e)) continue;
    const Edge& ed = g.edges()[e];
    s.vertex_colours[ed.u].push_back(c[e]);
    s.vertex_colours[ed.v].push_back(c[e]);
    s.coloured_adj[ed.u].push_back(ed.v);
    s.coloured_adj[ed.v].push_back(ed.u);
    ++s.multiplicity[c[e]];
  }
  for (auto& v : s.vertex_colours) std::sort(v.begin(), v.end());
  for (auto& v : s.coloured_adj) std::sort(v.begin(), v.end());
  for (std::size_t col = 1; col < s.multiplicity.size(); ++col)
    if (s.multiplicity[col] != 0 && s.multiplicity[col] != 2) ++s.colours_not_twice;

  s.clique_coloured.resize(cliques_.size());
  s.clique_repeated.resize(cliques_.size());
  std::vector<Colour> seen;
  for (std::size_t q = 0; q < cliques_.size(); ++q) {
    seen.clear();
    for (const auto e : clique_edges_[q])
      if (c.is_coloured(e)) seen.push_back(c[e]);
    std::sort(seen.begin(), seen.end());
    s.clique_coloured[q] = static_cast<std::uint32_t>(seen.size());
    s.clique_repeated[q] = std::adjacent_find(seen.begin(), seen.end()) != seen.end();
    if (!s.clique_repeated[q]) ++s.unrepeated;
    if (seen.size() != 2) ++s.cliques_not_two;
  }

  FourSetScanner scan(g, s, {});
  for (std::size_t e = 0; e < g.size() && s.max_on_four < 6; ++e) {
    if (c.is_coloured(e)) s.max_on_four = std::max(s.max_on_four, scan.best_from(g.edges()[e].u, g.edges()[e].v));
  }
  return s;
}

std::optional<Stage> StageEvaluator::classify(std::size_t unrepeated, std::size_t not_two, std::size_t not_twice,
                                              int max_on_four) const {
  if (unrepeated > 0) return std::nullopt;
  if (not_twice == 0 && not_two == 0 && max_on_four <= 3 && nearly_disjoint_) return Stage::P0;
  if (max_on_four <= 3) return Stage::P1;
  if (max_on_four <= 4) return Stage::P2;
  if (max_on_four <= 5) return Stage::P3;
  return Stage::P4;
}

StageEvaluator::Summary StageEvaluator::summarise(const State& s) const {
  return {classify(s.unrepeated, s.cliques_not_two, s.colours_not_twice, s.max_on_four), s.max_on_four,
          s.unrepeated};
}

bool StageEvaluator::admissible(const State& s, std::span<const EdgePaint> pending, const EdgePaint& paint) const {
  if (paint.colour == kUncoloured || s.colouring.is_coloured(paint.edge)) return false;
  const Edge& e = g_->edges()[paint.edge];
  if (sorted_contains(s.vertex_colours[e.u], paint.colour) || sorted_contains(s.vertex_colours[e.v], paint.colour)) {
    return false;
  }
  for (const auto& p : pending) {
    if (p.edge == paint.edge) return false;
    if (p.colour == paint.colour && !g_->edges()[p.edge].disjoint_from(e)) return false;
  }
  return true;
}

StageEvaluator::Summary StageEvaluator::summarise_with(const State& s, std::span<const EdgePaint> paints) const {
  std::size_t unrepeated = s.unrepeated;
  std::size_t not_two = s.cliques_not_two;
  std::size_t not_twice = s.colours_not_twice;

  std::vector<std::uint32_t> touched;
  for (const auto& p : paints)
    for (const auto q : edge_cliques_[p.edge]) touched.push_back(q);
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

  std::vector<Colour> seen;
  for (const auto q : touched) {
    seen.clear();
    for (const auto e : clique_edges_[q]) {
      if (s.colouring.is_coloured(e)) {
        seen.push_back(s.colouring[e]);
        continue;
      }
      for (const auto& p : paints)
        if (p.edge == e) seen.push_back(p.colour);
    }
    std::sort(seen.begin(), seen.end());
    const bool repeated = std::adjacent_find(seen.begin(), seen.end()) != seen.end();
    if (!s.clique_repeated[q] && repeated) --unrepeated;
    const bool was_two = s.clique_coloured[q] == 2;
    const bool is_two = seen.size() == 2;
    if (was_two && !is_two) ++not_two;
    if (!was_two && is_two) --not_two;
  }

  for (std::size_t i = 0; i < paints.size(); ++i) {
    bool first = true;
    for (std::size_t j = 0; j < i; ++j) first = first && paints[j].colour != paints[i].colour;
    if (!first) continue;
    std::uint32_t added = 0;
    for (const auto& p : paints) added += p.colour == paints[i].colour;
    const Colour col = paints[i].colour;
    const std::uint32_t before = col < s.multiplicity.size() ? s.multiplicity[col] : 0;
    const std::uint32_t after = before + added;
    const bool bad_before = before != 0 && before != 2;
    const bool bad_after = after != 2;
    if (bad_before && !bad_after) --not_twice;
    if (!bad_before && bad_after) ++not_twice;
  }

  int max_on_four = s.max_on_four;
  FourSetScanner scan(*g_, s, paints);
  for (const auto& p : paints) {
    if (max_on_four == 6) break;
    max_on_four = std::max(max_on_four, scan.best_from(g_->edges()[p.edge].u, g_->edges()[p.edge].v));
  }
  return {classify(unrepeated, not_two, not_twice, max_on_four), max_on_four, unrepeated};
}

void StageEvaluator::apply(State& s, std::span<const EdgePaint> paints) const {
  const auto summary = summarise_with(s, paints);
  std::vector<std::uint32_t> touched;
  for (const auto& p : paints) {
    const Edge& e = g_->edges()[p.edge];
    s.colouring.set(p.edge, p.colour);
    sorted_insert(s.vertex_colours[e.u], p.colour);
    sorted_insert(s.vertex_colours[e.v], p.colour);
    sorted_insert(s.coloured_adj[e.u], e.v);
    sorted_insert(s.coloured_adj[e.v], e.u);
    if (p.colour >= s.multiplicity.size()) s.multiplicity.resize(p.colour + 1, 0);
    for (const auto q : edge_cliques_[p.edge]) touched.push_back(q);
  }
  for (const auto& p : paints) ++s.multiplicity[p.colour];
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  std::vector<Colour> seen;
  for (const auto q : touched) {
    seen.clear();
    for (const auto e : clique_edges_[q])
      if (s.colouring.is_coloured(e)) seen.push_back(s.colouring[e]);
    std::sort(seen.begin(), seen.end());
    s.clique_coloured[q] = static_cast<std::uint32_t>(seen.size());
    s.clique_repeated[q] = std::adjacent_find(seen.begin(), seen.end()) != seen.end();
  }
  s.unrepeated = summary.unrepeated_cliques;
  s.max_on_four = summary.max_on_four;
  s.cliques_not_two = 0;
  for (const auto n : s.clique_coloured) s.cliques_not_two += n != 2;
  s.colours_not_twice = 0;
  for (std::size_t col = 1; col < s.multiplicity.size(); ++col)
    s.colours_not_twice += s.multiplicity[col] != 0 && s.multiplicity[col] != 2;
}

std::optional<Stage> check_stage(const Graph& g, const Colouring& c, int k) { return StageEvaluator(g, k).evaluate(c); }

}  // namespace antiramsey
