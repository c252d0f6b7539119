#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "antiramsey/colouring.hpp"
#include "antiramsey/graph.hpp"
#include "antiramsey/stage.hpp"
#include "antiramsey/structure.hpp"

namespace antiramsey {

/// One induction step from G_v^* to G.
struct ExtensionRecord {
  Vertex v = 0;  // label in the coloured input graph
  KvConfig config;
  std::size_t components = 1;  // K_k-components of G_v
  Stage before = Stage::P0;    // measured stage of the colouring of G_v^*
  Stage target = Stage::P0;
  Stage after = Stage::P0;
  std::string move;  // which family of edge sets was used
  std::size_t evaluations = 0;
};

/// Ledger of a step where G_v falls apart into several K_k-components G_i.
struct ComponentLedger {
  Vertex v = 0;
  KvConfig config;
  std::vector<std::int64_t> component_badness;  // b(G_i)
  std::vector<std::int64_t> shared_badness;     // |b(G_{i,S(v)})|
  std::int64_t b_sum = 0;
  std::int64_t host_badness = 0;  // b(G) of the graph being extended
  std::int64_t kv_badness = 0;    // b(K(v))
  /// Empty when b_sum >= 2k-2, where no j_min is defined.
  std::optional<Stage> jmin;
  /// Whether every G_{i,S(v)} had b <= 0.
  bool shared_nonpositive = true;
};

struct StageReport {
  Stage stage = Stage::P0;
  std::int64_t badness = 0;
  Stage bound = Stage::P0;
  std::vector<ComponentLedger> ledgers;
  std::vector<ExtensionRecord> extensions;
  std::size_t evaluations = 0;
  /// Subproblems that had to be recoloured with a different variant or vertex.
  std::size_t retries = 0;
  /// Steps that used a minimum-degree vertex other than the smallest index.
  std::size_t alternative_vertices = 0;
};

nlohmann::json to_json(const StageReport& report);

struct ColouringResult {
  Colouring colouring;
  StageReport report;
};

struct EngineOptions {
  /// Candidate edge sets examined per extension before giving up on it.
  std::size_t step_budget = 250000;
  /// Whether other minimum-degree vertices may be tried when the canonical one fails.
  bool alternative_vertices = true;
};

/// Extends a colouring of G_v^* (= red.star) to G for a single-component step.
/// The target is min(stage_bound(b(G)), j* + advance) with advance 0 for
/// X(k-2), 1 for other X, 2 for Y and U, where j* is the measured stage of
/// the G_v^* colouring. Edges flagged in `forbidden` (ids of g) stay uncoloured.
/// Returns nullopt when no candidate edge set reaches the target.
struct ExtensionResult {
  Colouring colouring;
  ExtensionRecord record;
};
std::optional<ExtensionResult> extend_colouring(const Graph& g, const NeighbourhoodSplit& split,
                                                const KvConfig& config, const Reduction& red,
                                                const Colouring& star_colouring, int k,
                                                const std::vector<bool>& forbidden = {},
                                                const EngineOptions& options = {});

/// Combines colourings of the K_k-components of G_v (each on `parts[i]`, labels
/// into red.reduced) using disjoint palettes, computes b_sum and j_min, and
/// extends to G with target min(stage_bound(b(G)), P_{j_min}).
struct CombineResult {
  Colouring colouring;
  ExtensionRecord record;
  ComponentLedger ledger;
};
std::optional<CombineResult> combine_components(const Graph& g, const NeighbourhoodSplit& split,
                                                const KvConfig& config, const Reduction& red,
                                                const std::vector<Subgraph>& parts,
                                                const std::vector<Colouring>& part_colourings, int k,
                                                const std::vector<bool>& forbidden = {},
                                                const EngineOptions& options = {});

/// Requires k >= 5, g a single K_k-component with m(g) < (k+1)/2. The result
/// is proper, leaves no K_k rainbow, and reaches at most stage_bound(b(g)).
/// Throws DensityViolation or DomainError on bad input and InvariantViolation
/// when the construction gets stuck.
ColouringResult anti_rainbow_colouring(const Graph& g, int k, const EngineOptions& options = {});

/// Colours every K_k-component separately with disjoint palettes; edges in no
/// K_k stay uncoloured. k >= 5.
Colouring colour_graph(const Graph& g, int k, const EngineOptions& options = {});

/// Same as colour_graph but also returns one report per K_k-component.
struct GraphColouring {
  Colouring colouring;
  std::vector<StageReport> components;
};
GraphColouring colour_graph_with_reports(const Graph& g, int k, const EngineOptions& options = {});

}  // namespace antiramsey
