#include "antiramsey/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "antiramsey/errors.hpp"

namespace antiramsey {

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) throw DomainError("loop at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(Vertex n) : n_(n), adj_(static_cast<std::size_t>(n)) {
  if (n < 0) throw DomainError("negative vertex count");
}

Graph::Graph(Vertex n, std::vector<Edge> edges) : Graph(n) {
  for (auto& e : edges) {
    e = make_edge(e.u, e.v);
    if (e.u < 0 || e.v >= n) {
      throw DomainError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                        "} outside vertex range 0.." + std::to_string(n - 1));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (const auto& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return false;
  const auto& shorter = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
  const Vertex target = adj_[a].size() <= adj_[b].size() ? b : a;
  return std::binary_search(shorter.begin(), shorter.end(), target);
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  if (a == b) return std::nullopt;
  const Edge e = a < b ? Edge{a, b} : Edge{b, a};
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::size_t Graph::edge_id(Vertex a, Vertex b) const {
  if (auto id = edge_index(a, b)) return *id;
  throw std::out_of_range("{" + std::to_string(a) + "," + std::to_string(b) + "} is not an edge");
}

std::size_t Graph::induced_edge_count(std::span<const Vertex> sorted_vertices) const {
  std::size_t count = 0;
  for (const Vertex v : sorted_vertices) {
    for (const Vertex w : adj_[v]) {
      if (w > v && std::binary_search(sorted_vertices.begin(), sorted_vertices.end(), w)) ++count;
    }
  }
  return count;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Vertex> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) local[sorted[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const Vertex v : sorted) {
    for (const Vertex w : g.neighbours(v)) {
      if (w > v && local[w] >= 0) edges.push_back({local[v], local[w]});
    }
  }
  return {Graph(static_cast<Vertex>(sorted.size()), std::move(edges)), std::move(sorted)};
}

Subgraph edge_subgraph(const Graph& g, std::span<const std::size_t> edge_ids) {
  std::vector<Vertex> verts;
  for (const auto id : edge_ids) {
    verts.push_back(g.edges()[id].u);
    verts.push_back(g.edges()[id].v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<Vertex> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  edges.reserve(edge_ids.size());
  for (const auto id : edge_ids) edges.push_back({local[g.edges()[id].u], local[g.edges()[id].v]});
  return {Graph(static_cast<Vertex>(verts.size()), std::move(edges)), std::move(verts)};
}

Subgraph compose(const Subgraph& outer, const Subgraph& inner) {
  std::vector<Vertex> labels(inner.to_parent.size());
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = outer.to_parent[inner.to_parent[i]];
  return {inner.graph, std::move(labels)};
}

Graph complete_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) edges.push_back({a, b});
  return Graph(n, std::move(edges));
}

Graph complete_minus_edge(Vertex n, Vertex a, Vertex b) {
  const Edge missing = make_edge(a, b);
  std::vector<Edge> edges;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      if (Edge{x, y} != missing) edges.push_back({x, y});
  return Graph(n, std::move(edges));
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const auto& e : g.edges()) edges.push_back(make_edge(perm[e.u], perm[e.v]));
  return Graph(g.order(), std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const auto& e : b.edges()) edges.push_back({e.u + a.order(), e.v + a.order()});
  return Graph(a.order() + b.order(), std::move(edges));
}

}  // namespace antiramsey
