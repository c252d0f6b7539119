#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "antiramsey/cliques.hpp"
#include "antiramsey/colouring.hpp"
#include "antiramsey/graph.hpp"

namespace antiramsey {

/// Colouring guarantee levels, P0 strongest. A graph in P_j is also in P_{j+1}.
enum class Stage : int { P0 = 0, P1 = 1, P2 = 2, P3 = 3, P4 = 4 };

inline int level(Stage s) { return static_cast<int>(s); }
inline Stage stage_from_level(int j) { return static_cast<Stage>(j < 0 ? 0 : j > 4 ? 4 : j); }
std::string to_string(Stage s);
Stage parse_stage(const std::string& text);

/// Strongest stage guaranteed for a single K_k-component of badness b:
/// P0 if b < k-3, P1 if b < k-1, P2 if b < k+1, P3 if b < 2k-2, else P4.
/// Throws DomainError unless 0 <= b < 2k.
Stage stage_bound(std::int64_t b, int k);

/// Stage promised for G when G_v splits into several K_k-components whose
/// ledger sums to b_sum: P0 if b_sum < k-3, P1 if < k-1, P2 if < k, P3 if < 2k-2.
/// Throws DomainError for b_sum >= 2k-2.
Stage jmin_stage(std::int64_t b_sum, int k);

/// A tentative colour for one edge, used for overlay evaluation.
struct EdgePaint {
  std::size_t edge = 0;
  Colour colour = kUncoloured;
};

/// Evaluates stage membership of colourings of one fixed graph. The K_k's, the
/// edge-to-clique index and the pairwise clique intersections are computed once.
class StageEvaluator {
 public:
  /// Aggregates of a colouring that overlay evaluation updates incrementally.
  struct State {
    Colouring colouring;
    std::vector<std::vector<Colour>> vertex_colours;  // sorted colours at each vertex
    std::vector<std::vector<Vertex>> coloured_adj;    // sorted coloured neighbours
    std::vector<std::uint32_t> clique_coloured;       // coloured edges per clique
    std::vector<bool> clique_repeated;                // clique has two equal colours
    std::vector<std::uint32_t> multiplicity;          // indexed by colour
    std::size_t unrepeated = 0;
    std::size_t cliques_not_two = 0;
    std::size_t colours_not_twice = 0;
    int max_on_four = 0;
  };

  struct Summary {
    std::optional<Stage> stage;  // empty when some K_k is rainbow
    int max_on_four = 0;
    std::size_t unrepeated_cliques = 0;
  };

  StageEvaluator(const Graph& g, int k);

  [[nodiscard]] const Graph& graph() const noexcept { return *g_; }
  [[nodiscard]] int k() const noexcept { return k_; }
  [[nodiscard]] const std::vector<VertexSet>& cliques() const noexcept { return cliques_; }
  [[nodiscard]] const std::vector<std::vector<std::size_t>>& clique_edges() const noexcept { return clique_edges_; }
  [[nodiscard]] std::span<const std::uint32_t> cliques_of_edge(std::size_t e) const { return edge_cliques_[e]; }
  /// Whether any two K_k's share at most one edge.
  [[nodiscard]] bool cliques_nearly_disjoint() const noexcept { return nearly_disjoint_; }

  /// Throws DomainError when c is improper or has the wrong size.
  [[nodiscard]] State prepare(const Colouring& c) const;
  [[nodiscard]] Summary summarise(const State& s) const;

  /// Whether `paint` can be added to the state (edge uncoloured, colour absent
  /// at both endpoints, also among `pending`).
  [[nodiscard]] bool admissible(const State& s, std::span<const EdgePaint> pending, const EdgePaint& paint) const;

  /// Summary of the state with `paints` applied. The paints must be admissible.
  [[nodiscard]] Summary summarise_with(const State& s, std::span<const EdgePaint> paints) const;

  /// Commits admissible paints to the state.
  void apply(State& s, std::span<const EdgePaint> paints) const;

  [[nodiscard]] std::optional<Stage> evaluate(const Colouring& c) const { return summarise(prepare(c)).stage; }

  /// Largest number of coloured edges spanned by four vertices, at most 6.
  [[nodiscard]] int max_coloured_on_four(const Colouring& c) const { return prepare(c).max_on_four; }

 private:
  [[nodiscard]] std::optional<Stage> classify(std::size_t unrepeated, std::size_t not_two, std::size_t not_twice,
                                              int max_on_four) const;

  const Graph* g_;
  int k_;
  std::vector<VertexSet> cliques_;
  std::vector<std::vector<std::size_t>> clique_edges_;
  std::vector<std::vector<std::uint32_t>> edge_cliques_;
  bool nearly_disjoint_ = true;
};

/// Smallest j with the colouring witnessing P_j, or nullopt when some K_k is
/// rainbow (uncoloured edges count as pairwise distinct). Throws on improper input.
std::optional<Stage> check_stage(const Graph& g, const Colouring& c, int k);

}  // namespace antiramsey
