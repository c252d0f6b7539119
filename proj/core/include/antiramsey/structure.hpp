#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "antiramsey/cliques.hpp"
#include "antiramsey/graph.hpp"

namespace antiramsey {

/// b(G) = 2e(G) - (k+1)v(G) + 2k. Zero on K_k; below 2k whenever m(G) < (k+1)/2.
std::int64_t badness(const Graph& g, int k);

/// Shape of the closed neighbourhood of a peeled vertex.
///   X(l): K(v) = K_k,       R(v) = K_l, S(v) = K_{k-l}
///   Y(l): K(v) = K_{k+1}^-, R(v) = K_l, S(v) = K_{k-l+1}^-
///   U(1): K(v) = K_{k+1},   R(v) = K_1, S(v) = K_k
enum class ConfigKind { X, Y, U };

struct KvConfig {
  ConfigKind kind = ConfigKind::X;
  int ell = 1;

  /// "X3", "Y1", "U1".
  [[nodiscard]] std::string label() const;
  static KvConfig parse(const std::string& label);
  friend bool operator==(const KvConfig&, const KvConfig&) = default;
};

/// Split of K(v) = {v} ∪ N(v) into the part whose K_k's all pass through v
/// (R(v), always containing v) and the rest (S(v)). All sets sorted.
struct NeighbourhoodSplit {
  Vertex v = 0;
  int k = 0;
  VertexSet closed;
  VertexSet private_part;
  VertexSet shared_part;
};

/// Strips vertices and edges lying in no K_k, then groups the k-cliques into
/// classes connected under edge-intersection. Each class is returned as the
/// union of its cliques, labelled back into g. Order follows the
/// lexicographically first clique of each class.
std::vector<Subgraph> kk_components(const Graph& g, int k);

/// True when every vertex and edge of g lies in a K_k and those K_k's form a
/// single class.
bool is_single_kk_component(const Graph& g, int k);

/// Minimum-degree vertex, smallest index on ties. Throws on the empty graph.
Vertex min_degree_vertex(const Graph& g);

/// Requires every vertex and edge of g to lie in a K_k (DomainError otherwise).
NeighbourhoodSplit split_neighbourhood(const Graph& g, Vertex v, int k);

/// Thrown when K(v) matches none of the admissible shapes.
class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

KvConfig classify_kv(const NeighbourhoodSplit& split, const Graph& g);

/// G_v^* (induced on V(G) \ R(v)) and G_v (G_v^* without edges in no K_k).
/// `reduced` shares the vertex labels of `star.graph`.
struct Reduction {
  Subgraph star;
  Graph reduced;
  std::size_t extra_edges = 0;  // e(G_v^* \ G_v)
};

Reduction reduce(const Graph& g, const NeighbourhoodSplit& split, int k);

/// e(G) - e(G_v^*) for each configuration.
std::int64_t expected_edge_delta(const KvConfig& c, int k);
/// b(G) - b(G_v^*) for each configuration.
std::int64_t expected_badness_delta(const KvConfig& c, int k);

/// Which badness functional a trace accounts with.
enum class Ledger {
  Standard,  // b(G), step delta b(G) - b(G_v^*)
  K4,        // 7e - 15v + 18, step delta b(G) - b(G_v) - 7 e(G_v^* \ G_v)
};

struct PeelStep {
  Vertex v = 0;  // label in the traced graph
  KvConfig config;
  std::int64_t edge_delta = 0;
  std::int64_t extra_edges = 0;
  std::int64_t badness_delta = 0;
};

/// Record of repeatedly removing R(v) for a minimum-degree v. Ends either at a
/// K_k residue or in a branch when G_v falls apart into several K_k-components.
struct PeelTrace {
  std::vector<PeelStep> steps;
  VertexSet residue;
  std::vector<PeelTrace> branches;
  std::int64_t overlap = 0;  // sum of branch orders minus the order of G_v

  [[nodiscard]] std::size_t total_steps() const;
};

/// Requires k >= 5, g a single K_k-component with m(g) < (k+1)/2. Every step's
/// deltas are checked against the closed forms; a mismatch throws InvariantViolation.
PeelTrace peel_trace(const Graph& g, int k);

/// Shared engine behind peel_trace and the K_4 variant. Does not check density.
PeelTrace peel_with_ledger(const Graph& g, int k, Ledger ledger);

/// Reassembles the badness of the traced graph from its ledger entries.
std::int64_t ledger_total(const PeelTrace& trace, int k, Ledger ledger);

nlohmann::json to_json(const PeelTrace& trace);

/// Whether the incidence graph between k-cliques and edges shared by two or
/// more of them is a forest (no cyclic chain of K_k's glued along edges).
bool clique_chains_acyclic(const Graph& g, int k);

}  // namespace antiramsey
