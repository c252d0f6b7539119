#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "antiramsey/colouring.hpp"
#include "antiramsey/graph.hpp"
#include "antiramsey/rational.hpp"
#include "antiramsey/structure.hpp"

namespace antiramsey {

/// b_K4(G) = 7e(G) - 15v(G) + 18. Zero on K_4, below 18 whenever m(G) < 15/7.
std::int64_t badness_k4(const Graph& g);

/// Density ceiling 15/7 for K_4-components.
Rational k4_density_ceiling();

/// J: K_{3,4} with parts {a,b,c} = {0,1,2} and {w,x,y,z} = {3,4,5,6}, plus the
/// triangle abc. 7 vertices, 15 edges, m(J) = 15/7.
Graph witness_j();

/// Peel of a K_4-component with m(g) < 15/7. Steps are X_1, X_2 or U_1 with
/// ledger deltas 6, 5, 13 after subtracting 7 e(G_v^* \ G_v). Other shapes
/// (Y_1, Y_2) raise InvariantViolation with a diagnostic.
PeelTrace peel_trace_k4(const Graph& g);

/// Coloured-edge cap per triangle implied by the ledger: 1 when b_K4 < 6,
/// 2 when b_K4 < 12, otherwise 3 (no constraint).
int k4_triangle_cap(std::int64_t b_k4);

/// Every K_4 non-rainbow and every triangle within the cap for b_K4(g).
bool satisfies_k4_invariants(const Graph& g, const Colouring& c);

struct K4Report {
  std::int64_t badness = 0;
  std::vector<std::size_t> peel_degrees;  // degree of each peeled vertex
  std::vector<std::string> configs;       // configuration of each peel step
  std::size_t retries = 0;
  std::size_t evaluations = 0;
};

nlohmann::json to_json(const K4Report& report);

struct K4ColouringResult {
  Colouring colouring;
  K4Report report;
};

/// Requires g to be a single K_4-component with m(g) < 15/7 (DensityViolation
/// otherwise). The result leaves every K_4 non-rainbow and keeps the triangle
/// caps; a stuck construction throws InvariantViolation.
K4ColouringResult anti_rainbow_colouring_k4(const Graph& g);

/// Colours each K_4-component with a disjoint palette.
Colouring colour_graph_k4(const Graph& g);

/// v(g) for a K_4-component with m(g) < 15/7; throws InvariantViolation if it exceeds 10.
Vertex component_vertex_bound_check(const Graph& g);

}  // namespace antiramsey
