#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "antiramsey/cliques.hpp"
#include "antiramsey/colouring.hpp"
#include "antiramsey/graph.hpp"

namespace antiramsey {

struct RainbowWitness {
  VertexSet clique;
  std::vector<Colour> colours;  // completed colours of the clique's edges, edge order
};

nlohmann::json to_json(const RainbowWitness& w);

/// Gives every uncoloured edge its own fresh colour. Throws DomainError when c is improper.
Colouring complete_colouring(const Graph& g, const Colouring& c);

/// First k-clique (lexicographic order) whose edges carry pairwise distinct
/// colours after completion, if any.
std::optional<RainbowWitness> find_rainbow_clique(const Graph& g, const Colouring& c, int k);

/// Limits for the exhaustive searches; exceeding either throws GuardExceeded.
struct OracleGuard {
  std::size_t max_edges = 24;
  std::chrono::milliseconds time_budget{60000};
};

/// A total proper colouring with no rainbow K_k, or nullopt when every proper
/// colouring has one. Backtracks over edges (most K_k's first), introducing
/// colours canonically, pruning rainbow or repeat-less cliques, and finishing
/// with fresh colours as soon as every K_k holds a repeat.
std::optional<Colouring> brute_force_no_rainbow_colouring(const Graph& g, int k, const OracleGuard& guard = {});

/// True when every proper edge-colouring of g contains a rainbow K_k.
bool forced_rainbow(const Graph& g, int k, const OracleGuard& guard = {});

/// Number of total proper edge-colourings up to renaming of colours, i.e. of
/// partitions of E(g) into matchings. Exercises the canonical colour search.
std::uint64_t count_proper_colourings(const Graph& g, const OracleGuard& guard = {});

}  // namespace antiramsey
