#include "antiramsey/cliques.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "antiramsey/errors.hpp"

namespace antiramsey {

namespace {

// Extends `current` with candidates in increasing order, so cliques come out
// lexicographically sorted.
void extend(const Graph& g, std::size_t k, VertexSet& current, const VertexSet& candidates,
            std::vector<VertexSet>& out) {
  if (current.size() == k) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (current.size() + (candidates.size() - i) < k) return;
    const Vertex next = candidates[i];
    VertexSet narrowed;
    const auto nbrs = g.neighbours(next);
    std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(i) + 1, candidates.end(),
                          nbrs.begin(), nbrs.end(), std::back_inserter(narrowed));
    current.push_back(next);
    extend(g, k, current, narrowed, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<VertexSet> enumerate_cliques(const Graph& g, int k) {
  if (k < 3) throw DomainError("clique order must be at least 3, got " + std::to_string(k));
  std::vector<VertexSet> out;
  VertexSet current;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) + 1 < static_cast<std::size_t>(k)) continue;
    VertexSet higher;
    for (const Vertex w : g.neighbours(v))
      if (w > v) higher.push_back(w);
    current.assign(1, v);
    extend(g, static_cast<std::size_t>(k), current, higher, out);
  }
  return out;
}

std::vector<std::vector<std::size_t>> clique_edge_ids(const Graph& g, const std::vector<VertexSet>& cliques) {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(cliques.size());
  for (const auto& q : cliques) {
    std::vector<std::size_t> ids;
    ids.reserve(q.size() * (q.size() - 1) / 2);
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = i + 1; j < q.size(); ++j) ids.push_back(g.edge_id(q[i], q[j]));
    out.push_back(std::move(ids));
  }
  return out;
}

bool is_complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

}  // namespace antiramsey
