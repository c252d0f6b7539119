#include "antiramsey/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "antiramsey/errors.hpp"

namespace antiramsey {

nlohmann::json to_json(const RainbowWitness& w) { return {{"clique", w.clique}, {"colours", w.colours}}; }

Colouring complete_colouring(const Graph& g, const Colouring& c) {
  require_proper(g, c);
  Colouring out = c;
  Colour next = c.max_colour();
  for (std::size_t e = 0; e < g.size(); ++e)
    if (!out.is_coloured(e)) out.set(e, ++next);
  return out;
}

std::optional<RainbowWitness> find_rainbow_clique(const Graph& g, const Colouring& c, int k) {
  const auto full = complete_colouring(g, c);
  const auto cliques = enumerate_cliques(g, k);
  const auto ids = clique_edge_ids(g, cliques);
  for (std::size_t q = 0; q < cliques.size(); ++q) {
    std::vector<Colour> colours;
    for (const auto e : ids[q]) colours.push_back(full[e]);
    auto sorted = colours;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) return RainbowWitness{cliques[q], colours};
  }
  return std::nullopt;
}

namespace {

using Mask = std::uint64_t;  // colours 1..63 as bits; guarded edge counts stay far below

class ColouringSearch {
 public:
  ColouringSearch(const Graph& g, int k, const OracleGuard& guard, bool require_repeats)
      : g_(g), guard_(guard), require_repeats_(require_repeats), start_(std::chrono::steady_clock::now()) {
    if (g.size() > guard.max_edges) {
      throw GuardExceeded("exhaustive colouring search limited to " + std::to_string(guard.max_edges) +
                          " edges, graph has " + std::to_string(g.size()));
    }
    if (g.size() >= 63) throw GuardExceeded("exhaustive colouring search supports at most 62 edges");
    if (require_repeats_) {
      cliques_ = enumerate_cliques(g, k);
      clique_edges_ = clique_edge_ids(g, cliques_);
    }
    edge_cliques_.resize(g.size());
    for (std::size_t q = 0; q < clique_edges_.size(); ++q)
      for (const auto e : clique_edges_[q]) edge_cliques_[e].push_back(q);
    order_.resize(g.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return edge_cliques_[a].size() > edge_cliques_[b].size(); });
    colour_.assign(g.size(), 0);
    at_vertex_.assign(static_cast<std::size_t>(g.order()), 0);
    repeated_.assign(cliques_.size(), false);
  }

  std::optional<Colouring> find() {
    if (!search(0, 0)) return std::nullopt;
    return Colouring(std::vector<Colour>(colour_.begin(), colour_.end()));
  }

  std::uint64_t count() {
    count_only_ = true;
    search(0, 0);
    return counted_;
  }

 private:
  void tick() {
    if ((++nodes_ & 0xfff) == 0 && std::chrono::steady_clock::now() - start_ > guard_.time_budget) {
      throw GuardExceeded("exhaustive colouring search exceeded its time budget");
    }
  }

  [[nodiscard]] Mask clique_colours(std::size_t q) const {
    Mask m = 0;
    for (const auto e : clique_edges_[q]) m |= colour_[e] ? Mask{1} << colour_[e] : 0;
    return m;
  }

  /// Re-derives whether clique q holds two equal colours.
  [[nodiscard]] bool has_repeat(std::size_t q) const {
    Mask m = 0;
    for (const auto e : clique_edges_[q]) {
      if (!colour_[e]) continue;
      const Mask bit = Mask{1} << colour_[e];
      if (m & bit) return true;
      m |= bit;
    }
    return false;
  }

  /// A clique without a repeat can still get one: some uncoloured edge can take
  /// a colour already present on a disjoint edge of the clique, or two disjoint
  /// uncoloured edges can share a fresh colour.
  [[nodiscard]] bool can_still_repeat(std::size_t q) const {
    const auto& ids = clique_edges_[q];
    for (const auto f : ids) {
      if (colour_[f]) continue;
      const Edge& fe = g_.edges()[f];
      const Mask blocked = at_vertex_[fe.u] | at_vertex_[fe.v];
      for (const auto e : ids) {
        if (e == f) continue;
        const Edge& ee = g_.edges()[e];
        if (!ee.disjoint_from(fe)) continue;
        if (!colour_[e]) return true;
        if (!(blocked & (Mask{1} << colour_[e]))) return true;
      }
    }
    return false;
  }

  bool search(std::size_t depth, Colour used) {
    tick();
    if (require_repeats_ && !count_only_ && satisfied_ == cliques_.size()) {
      for (std::size_t i = depth; i < order_.size(); ++i) colour_[order_[i]] = ++used;
      return true;
    }
    if (depth == order_.size()) {
      if (count_only_) {
        ++counted_;
        return false;
      }
      return !require_repeats_ || satisfied_ == cliques_.size();
    }
    const std::size_t e = order_[depth];
    const Edge& ed = g_.edges()[e];
    for (Colour c = 1; c <= used + 1; ++c) {
      const Mask bit = Mask{1} << c;
      if ((at_vertex_[ed.u] | at_vertex_[ed.v]) & bit) continue;
      colour_[e] = c;
      at_vertex_[ed.u] |= bit;
      at_vertex_[ed.v] |= bit;
      std::vector<std::size_t> newly;
      bool ok = true;
      for (const auto q : edge_cliques_[e]) {
        if (repeated_[q]) continue;
        if (has_repeat(q)) {
          repeated_[q] = true;
          newly.push_back(q);
          ++satisfied_;
        }
      }
      if (require_repeats_) {
        for (Vertex x : {ed.u, ed.v}) {
          // Any clique near the new edge may have lost its last chance.
          for (const Vertex y : g_.neighbours(x)) {
            for (const auto q : edge_cliques_[g_.edge_id(x, y)]) {
              if (!repeated_[q] && !can_still_repeat(q)) ok = false;
              if (!ok) break;
            }
            if (!ok) break;
          }
          if (!ok) break;
        }
      }
      if (ok && search(depth + 1, std::max(used, c))) return true;
      for (const auto q : newly) {
        repeated_[q] = false;
        --satisfied_;
      }
      at_vertex_[ed.u] &= ~bit;
      at_vertex_[ed.v] &= ~bit;
      colour_[e] = 0;
    }
    return false;
  }

  const Graph& g_;
  OracleGuard guard_;
  bool require_repeats_;
  bool count_only_ = false;
  std::chrono::steady_clock::time_point start_;
  std::vector<VertexSet> cliques_;
  std::vector<std::vector<std::size_t>> clique_edges_;
  std::vector<std::vector<std::size_t>> edge_cliques_;
  std::vector<std::size_t> order_;
  std::vector<Colour> colour_;
  std::vector<Mask> at_vertex_;
  std::vector<bool> repeated_;
  std::size_t satisfied_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t counted_ = 0;
};

}  // namespace

std::optional<Colouring> brute_force_no_rainbow_colouring(const Graph& g, int k, const OracleGuard& guard) {
  if (k < 3) throw DomainError("clique order must be at least 3");
  return ColouringSearch(g, k, guard, true).find();
}

bool forced_rainbow(const Graph& g, int k, const OracleGuard& guard) {
  return !brute_force_no_rainbow_colouring(g, k, guard).has_value();
}

std::uint64_t count_proper_colourings(const Graph& g, const OracleGuard& guard) {
  return ColouringSearch(g, 3, guard, false).count();
}

}  // namespace antiramsey
