#include "antiramsey/density.hpp"

#include <algorithm>

#include "antiramsey/errors.hpp"
#include "max_flow.hpp"

namespace antiramsey {

namespace {

// Maximises q*e(S) - p*|S| over vertex sets S containing `forced`, via the
// standard max-closure construction: source -> edge node (q), edge node ->
// endpoints (inf), vertex -> sink (p). Returns the minimal optimal S.
VertexSet best_closure(const Graph& g, std::int64_t p, std::int64_t q, std::span<const Vertex> forced) {
  const std::size_t m = g.size();
  const auto n = static_cast<std::size_t>(g.order());
  const std::size_t source = 0;
  const std::size_t sink = 1;
  const auto edge_node = [](std::size_t e) { return 2 + e; };
  const auto vertex_node = [m](Vertex v) { return 2 + m + static_cast<std::size_t>(v); };

  detail::MaxFlow flow(2 + m + n);
  for (std::size_t e = 0; e < m; ++e) {
    flow.add_edge(source, edge_node(e), q);
    flow.add_edge(edge_node(e), vertex_node(g.edges()[e].u), detail::MaxFlow::kInfinite);
    flow.add_edge(edge_node(e), vertex_node(g.edges()[e].v), detail::MaxFlow::kInfinite);
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (p > 0) flow.add_edge(vertex_node(v), sink, p);
  }
  for (const Vertex v : forced) flow.add_edge(source, vertex_node(v), detail::MaxFlow::kInfinite);
  flow.run(source, sink);
  const auto side = flow.source_side(source);
  VertexSet chosen;
  for (Vertex v = 0; v < g.order(); ++v)
    if (side[vertex_node(v)]) chosen.push_back(v);
  return chosen;
}

}  // namespace

DensestSubgraph densest_subgraph(const Graph& g) {
  if (g.order() == 0) throw DomainError("maximum density of the empty graph is undefined");
  VertexSet best(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) best[v] = v;
  auto best_edges = static_cast<std::int64_t>(g.size());
  auto best_size = static_cast<std::int64_t>(g.order());
  while (true) {
    const Rational current(best_edges, best_size);
    const auto candidate = best_closure(g, current.numerator(), current.denominator(), {});
    const auto edges = static_cast<std::int64_t>(g.induced_edge_count(candidate));
    const auto size = static_cast<std::int64_t>(candidate.size());
    if (size == 0 || Rational(edges, size) <= current) break;
    best = candidate;
    best_edges = edges;
    best_size = size;
  }
  return {Rational(best_edges, best_size), std::move(best)};
}

Rational max_density(const Graph& g) { return densest_subgraph(g).density; }

Rational max_2_density(const Graph& g) {
  if (g.order() < 3) throw DomainError("maximum 2-density needs at least 3 vertices");
  std::size_t max_degree = 0;
  for (Vertex v = 0; v < g.order(); ++v) max_degree = std::max(max_degree, g.degree(v));
  if (max_degree <= 1) {
    // A matching: the optimum is read off directly.
    if (g.size() == 0) return Rational(-1, g.order() - 2);
    if (g.size() == 1) return Rational(0);
    return Rational(1, 2);
  }
  // Some induced path or triangle on 3 vertices gives at least 1; any better
  // subgraph has at least two edges, so forcing each edge in turn suffices.
  Rational current(1);
  while (true) {
    Rational improved = current;
    for (const auto& e : g.edges()) {
      const Vertex forced[] = {e.u, e.v};
      const auto s = best_closure(g, current.numerator(), current.denominator(), forced);
      if (s.size() < 3) continue;
      const auto edges = static_cast<std::int64_t>(g.induced_edge_count(s));
      const Rational ratio(edges - 1, static_cast<std::int64_t>(s.size()) - 2);
      if (ratio > improved) improved = ratio;
    }
    if (improved == current) return current;
    current = improved;
  }
}

Rational density_ceiling(int k) { return Rational(k + 1, 2); }

}  // namespace antiramsey
