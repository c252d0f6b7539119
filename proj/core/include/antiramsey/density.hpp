#pragma once

#include "antiramsey/cliques.hpp"
#include "antiramsey/graph.hpp"
#include "antiramsey/rational.hpp"

namespace antiramsey {

struct DensestSubgraph {
  Rational density;
  VertexSet vertices;  // sorted; attains `density` as an induced subgraph
};

/// Exact maximum of e(J)/v(J) over non-empty subgraphs, with a subgraph that
/// attains it. Uses Dinkelbach iteration over max-closure min cuts, so every
/// intermediate value is an exact rational. Throws DomainError on an empty graph.
DensestSubgraph densest_subgraph(const Graph& g);

/// m(G). 0/1 for edgeless graphs.
Rational max_density(const Graph& g);

/// m2(G): maximum of (e(J)-1)/(v(J)-2) over subgraphs with at least 3 vertices.
/// Throws DomainError when g has fewer than 3 vertices.
Rational max_2_density(const Graph& g);

/// Ceiling (k+1)/2 = m2(K_k).
Rational density_ceiling(int k);

}  // namespace antiramsey
