#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace antiramsey {

using Vertex = std::int32_t;

/// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
  [[nodiscard]] bool touches(Vertex x) const noexcept { return u == x || v == x; }
  [[nodiscard]] bool disjoint_from(const Edge& o) const noexcept {
    return u != o.u && u != o.v && v != o.u && v != o.v;
  }
};

/// Orders the endpoints; throws DomainError on a loop.
Edge make_edge(Vertex a, Vertex b);

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
///
/// Edges are kept sorted, so an edge's position in edges() is a stable id that
/// colourings index by.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Vertex n);
  /// Duplicates are merged. Throws DomainError on loops or endpoints >= n.
  Graph(Vertex n, std::vector<Edge> edges);

  [[nodiscard]] Vertex order() const noexcept { return n_; }
  [[nodiscard]] std::size_t size() const noexcept { return edges_.size(); }
  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
  [[nodiscard]] std::span<const Vertex> neighbours(Vertex v) const { return adj_[v]; }
  [[nodiscard]] std::size_t degree(Vertex v) const { return adj_[v].size(); }
  [[nodiscard]] bool adjacent(Vertex a, Vertex b) const;
  [[nodiscard]] std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;
  /// Like edge_index but throws std::out_of_range when the pair is not an edge.
  [[nodiscard]] std::size_t edge_id(Vertex a, Vertex b) const;

  /// Number of edges with both endpoints in the sorted vertex list.
  [[nodiscard]] std::size_t induced_edge_count(std::span<const Vertex> sorted_vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// A graph together with the parent label of each of its vertices.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;

  [[nodiscard]] Vertex parent(Vertex v) const { return to_parent[v]; }
  [[nodiscard]] Edge parent(const Edge& e) const { return make_edge(to_parent[e.u], to_parent[e.v]); }
};

/// Subgraph induced on `vertices`; relabels them 0..|vertices|-1 in sorted order.
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Subgraph formed by the given edge ids of g and their endpoints.
Subgraph edge_subgraph(const Graph& g, std::span<const std::size_t> edge_ids);

/// Re-expresses a subgraph of `inner`'s parent in terms of `outer`'s parent.
Subgraph compose(const Subgraph& outer, const Subgraph& inner);

Graph complete_graph(Vertex n);

/// Complete graph on n vertices with the edge {a, b} removed.
Graph complete_minus_edge(Vertex n, Vertex a, Vertex b);

/// Image of g under the vertex permutation `perm` (vertex v becomes perm[v]).
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace antiramsey
