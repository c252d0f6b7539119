#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "antiramsey/graph.hpp"
#include "antiramsey/structure.hpp"

namespace antiramsey {

enum class CorpusKind { CliqueChain, Figure1Fixtures, RandomSparse, GluingMix };

std::string to_string(CorpusKind kind);
CorpusKind parse_corpus_kind(const std::string& name);

/// Generated test graph with the recipe that rebuilds it exactly.
struct CorpusItem {
  Graph graph;
  nlohmann::json recipe;
  /// Badness predicted by the construction (k >= 5: b(G); k = 4: 7e - 15v + 18),
  /// for single-component kinds.
  std::optional<std::int64_t> predicted_badness;
  /// Fixtures only: the configuration of K(v) at `vertex`.
  std::optional<KvConfig> expected_config;
  std::optional<Vertex> vertex;
};

/// Parameters; unused fields are ignored by kinds that do not need them.
///   clique-chain: `length` K_k's glued on pairwise disjoint edges (tree-like
///                 when `tree` is set); `length` <= 0 picks 2..max_length.
///   gluing-mix:   random attachments X_l / Y_l / U_1 starting from K_k, keeping
///                 the ledger below its ceiling; `sequence` fixes the labels.
///   random-sparse: `planted` K_k's on `pool` vertices plus noise edges with
///                 probability `noise`; kept when every K_k-component is sparse.
struct CorpusParams {
  std::size_t count = 1;
  int length = 0;
  int max_length = 8;
  bool tree = false;
  int steps = 0;
  int max_steps = 8;
  std::vector<std::string> sequence;
  int pool = 0;
  int planted = 0;
  double noise = 0.0;
  bool relabel = true;

  [[nodiscard]] nlohmann::json to_json() const;
  static CorpusParams from_json(const nlohmann::json& j);
};

/// Throws DomainError on unsatisfiable parameters (for example a sequence whose
/// ledger reaches the ceiling, or k outside the supported range).
std::vector<CorpusItem> corpus(CorpusKind kind, int k, const CorpusParams& params, std::uint64_t seed);

/// Rebuilds one item from its recipe.
CorpusItem regenerate(const nlohmann::json& recipe);

/// The K(v) fixtures X_1..X_{k-2}, Y_1..Y_{k-2}, U_1 with v = 0 of minimum degree
/// and every S(v) vertex in a further K_k where the shape needs it.
std::vector<CorpusItem> figure1_fixtures(int k);

/// Ledger value used by the corpus: b(G) for k >= 5, 7e - 15v + 18 for k = 4.
std::int64_t corpus_ledger(const Graph& g, int k);

/// Whether g satisfies the sparse precondition: m(H) < (k+1)/2 for k >= 5 or
/// m(H) < 15/7 for k = 4, for every K_k-component H.
bool components_sparse(const Graph& g, int k);

}  // namespace antiramsey
