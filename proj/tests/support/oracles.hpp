#pragma once

// Slow, independent reference implementations. Each one works from the
// definitions directly (subset enumeration, set partitions, injective maps)
// and shares no code with the library beyond the Graph container.

#include <cstdint>
#include <optional>
#include <vector>

#include "antiramsey/graph.hpp"
#include "antiramsey/rational.hpp"

namespace oracle {

using antiramsey::Graph;
using antiramsey::Rational;
using antiramsey::Vertex;
using VertexSet = std::vector<Vertex>;

/// Edges of g inside the vertex bitmask.
int edges_within(const Graph& g, std::uint32_t mask);

/// max e(S)/|S| over all non-empty vertex subsets (order <= 20).
Rational max_density(const Graph& g);

/// max (e(S)-1)/(|S|-2) over vertex subsets with at least 3 vertices.
Rational max_2_density(const Graph& g);

/// All k-subsets that induce complete graphs, in lexicographic order.
std::vector<VertexSet> cliques(const Graph& g, int k);

/// Whether `pattern` is a (not necessarily induced) subgraph of `host`.
bool contains_subgraph(const Graph& pattern, const Graph& host);

/// The graph built from K_{3,4} by adding a triangle on the side of size 3.
Graph j_graph();

/// Colour classes as a partition: colours[e] for edge e, 0 for uncoloured.
using Colours = std::vector<std::uint32_t>;

/// Whether every colour class is a matching (uncoloured edges ignored).
bool proper(const Graph& g, const Colours& c);

/// A K_k whose edges all carry distinct colours; uncoloured edges count as
/// distinct from everything.
std::optional<VertexSet> rainbow_clique(const Graph& g, const Colours& c, int k);

/// Number of partitions of the edge set into matchings (proper colourings up
/// to renaming). Enumerates restricted growth strings; keep e(g) small.
std::uint64_t count_matching_partitions(const Graph& g);

/// Whether some partition of E(g) into matchings leaves no rainbow K_k.
bool exists_non_rainbow_partition(const Graph& g, int k);

/// Inclusion-minimal vertex sets S with 2 <= |S| <= vmax and e(S)/|S| >= t.
std::vector<VertexSet> minimal_dense_sets(const Graph& g, int vmax, const Rational& t);

/// Largest number of coloured edges on any 4 vertices.
int max_coloured_on_four(const Graph& g, const Colours& c);

/// Stage level from the predicate definitions: -1 when some K_k is rainbow
/// (treating uncoloured edges as distinct), otherwise 0..4.
int stage_level(const Graph& g, const Colours& c, int k);

}  // namespace oracle
