#pragma once

#include <vector>

#include "antiramsey/graph.hpp"

namespace antiramsey {

using VertexSet = std::vector<Vertex>;

/// All vertex sets of size k inducing complete subgraphs, each sorted, listed
/// in lexicographic order. Requires k >= 3.
std::vector<VertexSet> enumerate_cliques(const Graph& g, int k);

/// Per-clique list of edge ids, in the same order as `cliques`.
std::vector<std::vector<std::size_t>> clique_edge_ids(const Graph& g, const std::vector<VertexSet>& cliques);

bool is_complete(const Graph& g);

}  // namespace antiramsey
