#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "antiramsey/cliques.hpp"
#include "antiramsey/graph.hpp"
#include "antiramsey/rational.hpp"

namespace antiramsey {

/// Limits for the census enumeration.
struct CensusGuard {
  int max_vmax = 12;
  /// Connected vertex sets examined before GuardExceeded is thrown.
  std::size_t max_sets = 20'000'000;
};

/// Inclusion-minimal vertex sets S with |S| <= vmax and e(S)/|S| >= threshold,
/// each sorted, in lexicographic order. Every vertex set of size <= vmax with
/// density at least the threshold contains one of them, so the list is empty
/// exactly when no such set exists. Minimal sets are connected and have
/// minimum degree above the threshold, so the search runs on the matching
/// core and stops extending a set as soon as it is dense.
std::vector<VertexSet> dense_subgraph_census(const Graph& g, int vmax, const Rational& threshold,
                                             const CensusGuard& guard = {});

/// Whether some vertex set with at most vmax vertices reaches the threshold.
/// Tries cheap certificates before falling back to the census.
bool has_small_dense_subgraph(const Graph& g, int vmax, const Rational& threshold, const CensusGuard& guard = {});

/// An embedding of J as (a, b, c, w, x, y, z), or nullopt. Anchored on the
/// triangle abc: J is present iff some triangle has four common neighbours.
std::optional<std::vector<Vertex>> find_witness_j(const Graph& g);
inline bool contains_witness_j(const Graph& g) { return find_witness_j(g).has_value(); }

struct ScanRow {
  Vertex n = 0;
  double c = 0.0;  // p = n^{-c}
  double p = 0.0;
  std::size_t trials = 0;
  std::optional<double> rate_j;  // k = 4 only
  double rate_colourable = 0.0;
  double rate_census = 0.0;  // proven non-empty; undecided samples count as empty
  std::size_t census_undecided = 0;
  std::uint64_t seed = 0;
};

struct ScanOptions {
  int census_vmax = 12;
  /// Upper bound on n * trials * exponents.
  std::uint64_t max_work = 50'000'000;
  /// Per-sample census budget. A sample whose search runs out of budget is
  /// counted in ScanRow::census_undecided instead of failing the scan.
  CensusGuard census_guard{12, 4000};
};

/// Per exponent c samples `trials` coupled graphs G(n, n^{-c}) (trial t uses
/// the same uniforms at every c) and records how often J appears (k = 4), how
/// often every K_k-component is sparse and gets coloured, and how often the
/// census at threshold 15/7 (k = 4) or (k+1)/2 (k >= 5) is non-empty.
std::vector<ScanRow> threshold_scan(int k, Vertex n, const std::vector<double>& exponents, std::size_t trials,
                                    std::uint64_t seed, const ScanOptions& options = {});

/// Per-trial indicators behind one ScanRow, exposed for coupling checks.
struct ScanSample {
  bool j_present = false;
  bool colourable = false;
  bool census_nonempty = false;
  bool census_undecided = false;
};
ScanSample scan_sample(int k, Vertex n, double p, std::uint64_t seed, std::uint64_t trial,
                       const ScanOptions& options = {});

std::string scan_csv(const std::vector<ScanRow>& rows);
nlohmann::json scan_json(const std::vector<ScanRow>& rows);

}  // namespace antiramsey
