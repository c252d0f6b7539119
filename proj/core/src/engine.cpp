#include "antiramsey/engine.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "antiramsey/density.hpp"
#include "antiramsey/errors.hpp"
#include "extension_search.hpp"

namespace antiramsey {

namespace {

using detail::apply_paints;
using detail::membership;

int advance_allowance(const KvConfig& c, int k) {
  if (c.kind == ConfigKind::X) return c.ell == k - 2 ? 0 : 1;
  return 2;
}

Stage min_stage(Stage a, Stage b) { return level(a) <= level(b) ? a : b; }

struct SearchOutcome {
  std::optional<detail::Found> found;
  Stage stage = Stage::P0;
  std::size_t evaluations = 0;
};

SearchOutcome search_extension(const Graph& g, int k, const NeighbourhoodSplit& split, const Colouring& lifted,
                               const std::vector<bool>& forbidden, Stage target, const EngineOptions& options) {
  const StageEvaluator ev(g, k);
  const auto state = ev.prepare(lifted);
  SearchOutcome out;
  auto accept = [&](std::span<const EdgePaint> paints) {
    const auto summary = ev.summarise_with(state, paints);
    if (!summary.stage || level(*summary.stage) > level(target)) return false;
    out.stage = *summary.stage;
    return true;
  };
  detail::ExtensionSearch search(ev, state, detail::candidate_edges(g, split, lifted, forbidden),
                                 detail::local_palette(g, split, lifted), lifted.max_colour() + 1, accept,
                                 options.step_budget);
  out.found = search.run();
  out.evaluations = search.evaluations();
  return out;
}

Stage bound_or_invariant(const Graph& g, int k) {
  const auto b = badness(g, k);
  try {
    return stage_bound(b, k);
  } catch (const DomainError&) {
    throw InvariantViolation("badness " + std::to_string(b) + " of a K_" + std::to_string(k) +
                             "-component on " + std::to_string(g.order()) + " vertices lies outside [0, 2k)");
  }
}

std::vector<bool> map_forbidden_to_star(const Graph& g, const Reduction& red, const std::vector<bool>& forbidden) {
  std::vector<bool> out(red.star.graph.size(), false);
  if (forbidden.empty()) return out;
  const auto& edges = red.star.graph.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Edge pe = red.star.parent(edges[e]);
    out[e] = forbidden[g.edge_id(pe.u, pe.v)];
  }
  return out;
}

}  // namespace

std::optional<ExtensionResult> extend_colouring(const Graph& g, const NeighbourhoodSplit& split,
                                                const KvConfig& config, const Reduction& red,
                                                const Colouring& star_colouring, int k,
                                                const std::vector<bool>& forbidden, const EngineOptions& options) {
  const auto before = check_stage(red.star.graph, star_colouring, k);
  if (!before) throw DomainError("the colouring of G_v^* leaves a rainbow K_k");
  Colouring lifted(g.size());
  lift_colouring(red.star, star_colouring, g, lifted);
  const Stage target =
      min_stage(bound_or_invariant(g, k), stage_from_level(level(*before) + advance_allowance(config, k)));
  const auto outcome = search_extension(g, k, split, lifted, forbidden, target, options);
  if (!outcome.found) return std::nullopt;
  ExtensionResult result;
  result.colouring = apply_paints(std::move(lifted), outcome.found->paints);
  result.record = {split.v, config, 1, *before, target, outcome.stage, outcome.found->move,
                   outcome.evaluations};
  return result;
}

std::optional<CombineResult> combine_components(const Graph& g, const NeighbourhoodSplit& split,
                                                const KvConfig& config, const Reduction& red,
                                                const std::vector<Subgraph>& parts,
                                                const std::vector<Colouring>& part_colourings, int k,
                                                const std::vector<bool>& forbidden, const EngineOptions& options) {
  if (parts.size() != part_colourings.size()) throw DomainError("one colouring per component is required");
  const Graph& star = red.star.graph;
  Colouring star_colouring(star.size());
  Colour offset = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    lift_colouring(parts[i], part_colourings[i], star, star_colouring, offset);
    offset += part_colourings[i].max_colour();
  }
  const auto before = check_stage(star, star_colouring, k);
  if (!before) throw DomainError("the component colourings leave a rainbow K_k in G_v^*");

  CombineResult result;
  auto& ledger = result.ledger;
  ledger.v = split.v;
  ledger.config = config;
  ledger.host_badness = badness(g, k);
  ledger.kv_badness = badness(induced_subgraph(g, split.closed).graph, k);
  const auto in_s = membership(g.order(), split.shared_part);
  for (const auto& part : parts) {
    const std::int64_t b_part = badness(part.graph, k);
    VertexSet shared;
    for (Vertex x = 0; x < part.graph.order(); ++x) {
      const Vertex in_g = red.star.parent(part.parent(x));
      if (in_s[in_g]) shared.push_back(in_g);
    }
    std::sort(shared.begin(), shared.end());
    const std::int64_t b_shared = badness(induced_subgraph(g, shared).graph, k);
    if (b_shared > 0) ledger.shared_nonpositive = false;
    ledger.component_badness.push_back(b_part);
    ledger.shared_badness.push_back(b_shared < 0 ? -b_shared : b_shared);
    ledger.b_sum += b_part + ledger.shared_badness.back();
  }
  if (ledger.b_sum < 2 * static_cast<std::int64_t>(k) - 2) ledger.jmin = jmin_stage(ledger.b_sum, k);

  Colouring lifted(g.size());
  lift_colouring(red.star, star_colouring, g, lifted);
  const Stage target = min_stage(bound_or_invariant(g, k), ledger.jmin.value_or(Stage::P4));
  const auto outcome = search_extension(g, k, split, lifted, forbidden, target, options);
  if (!outcome.found) return std::nullopt;
  result.colouring = apply_paints(std::move(lifted), outcome.found->paints);
  result.record = {split.v, config, parts.size(), *before, target, outcome.stage, outcome.found->move,
                   outcome.evaluations};
  return result;
}

namespace {

/// Inductive colouring of one K_k-component. Failed attempts are retried with
/// other forbidden-edge variants and other minimum-degree vertices before the
/// step is reported as stuck.
class Engine {
 public:
  Engine(int k, const EngineOptions& options) : k_(k), options_(options) {}

  struct Outcome {
    Colouring colouring;
    std::vector<ExtensionRecord> extensions;
    std::vector<ComponentLedger> ledgers;
    std::size_t evaluations = 0;
    std::size_t retries = 0;
    std::size_t alternatives = 0;
  };

  std::optional<Outcome> colour(const Graph& g, const std::vector<Vertex>& labels, const std::vector<bool>& forbidden) {
    if (g.order() == k_) return base_case(g, forbidden);

    std::vector<Vertex> order;
    const auto d = g.degree(min_degree_vertex(g));
    for (Vertex x = 0; x < g.order(); ++x)
      if (g.degree(x) == d) order.push_back(x);
    if (!options_.alternative_vertices) order.resize(1);

    std::size_t attempts = 0;
    for (std::size_t idx = 0; idx < order.size(); ++idx) {
      const Vertex v = order[idx];
      const auto split = split_neighbourhood(g, v, k_);
      KvConfig config;
      try {
        config = classify_kv(split, g);
      } catch (const ClassificationError& e) {
        note_failure(labels, v, e.what());
        continue;
      }
      const auto red = reduce(g, split, k_);
      const auto parts = kk_components(red.reduced, k_);
      if (!covers_all_vertices(parts, red.reduced.order())) {
        note_failure(labels, v, "a vertex of G_v^* lies in no K_k");
        continue;
      }
      for (const auto& variant : forbidden_variants(g, split, red, parts, forbidden)) {
        auto outcome = attempt(g, labels, split, config, red, parts, variant, forbidden);
        if (outcome) {
          outcome->retries += attempts;
          outcome->alternatives += idx > 0 ? 1 : 0;
          return outcome;
        }
        ++attempts;
      }
      note_failure(labels, v, "no extension of " + config.label() + " reached the required stage");
    }
    return std::nullopt;
  }

  [[nodiscard]] const std::string& failure() const noexcept { return failure_; }

 private:
  void note_failure(const std::vector<Vertex>& labels, Vertex v, const std::string& why) {
    if (failure_.empty()) failure_ = "at v=" + std::to_string(labels[v]) + ": " + why;
  }

  static bool covers_all_vertices(const std::vector<Subgraph>& parts, Vertex n) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (const auto& p : parts)
      for (const Vertex x : p.to_parent) seen[x] = true;
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  }

  std::optional<Outcome> base_case(const Graph& g, const std::vector<bool>& forbidden) {
    const auto& edges = g.edges();
    for (std::size_t a = 0; a < edges.size(); ++a) {
      if (!forbidden.empty() && forbidden[a]) continue;
      for (std::size_t b = a + 1; b < edges.size(); ++b) {
        if ((!forbidden.empty() && forbidden[b]) || !edges[a].disjoint_from(edges[b])) continue;
        Outcome out;
        out.colouring = Colouring(g.size());
        out.colouring.set(a, 1);
        out.colouring.set(b, 1);
        return out;
      }
    }
    return std::nullopt;
  }

  /// Forbidden-edge sets for the edges of G_v^*. Single component: inherited
  /// set first, then additionally all edges inside S(v). Several components:
  /// first keep S(v)-edges uncoloured in components meeting S(v) in exactly
  /// one edge, then the inherited set, then all S(v)-edges.
  std::vector<std::vector<bool>> forbidden_variants(const Graph& g, const NeighbourhoodSplit& split,
                                                    const Reduction& red, const std::vector<Subgraph>& parts,
                                                    const std::vector<bool>& forbidden) const {
    const auto base = map_forbidden_to_star(g, red, forbidden);
    const auto in_s = membership(g.order(), split.shared_part);
    const auto& star = red.star;
    std::vector<bool> s_edge(star.graph.size(), false);
    for (std::size_t e = 0; e < star.graph.size(); ++e) {
      const Edge pe = star.parent(star.graph.edges()[e]);
      s_edge[e] = in_s[pe.u] && in_s[pe.v];
    }
    auto all_s = base;
    for (std::size_t e = 0; e < s_edge.size(); ++e) all_s[e] = all_s[e] || s_edge[e];

    std::vector<std::vector<bool>> out;
    if (parts.size() == 1) {
      out = {base, all_s};
    } else {
      auto single = base;
      for (const auto& part : parts) {
        std::vector<std::size_t> ids;
        for (const auto& e : part.graph.edges()) {
          const Edge se = part.parent(e);
          const auto id = star.graph.edge_id(se.u, se.v);
          if (s_edge[id]) ids.push_back(id);
        }
        if (ids.size() == 1) single[ids.front()] = true;
      }
      out = {single, base, all_s};
    }
    std::vector<std::vector<bool>> unique;
    for (auto& v : out)
      if (std::find(unique.begin(), unique.end(), v) == unique.end()) unique.push_back(std::move(v));
    return unique;
  }

  std::optional<Outcome> attempt(const Graph& g, const std::vector<Vertex>& labels, const NeighbourhoodSplit& split,
                                 const KvConfig& config, const Reduction& red, const std::vector<Subgraph>& parts,
                                 const std::vector<bool>& star_forbidden, const std::vector<bool>& forbidden) {
    Outcome out;
    std::vector<Colouring> part_colourings;
    const Graph& star = red.star.graph;
    for (const auto& part : parts) {
      std::vector<bool> part_forbidden(part.graph.size(), false);
      for (std::size_t e = 0; e < part.graph.size(); ++e) {
        const Edge se = part.parent(part.graph.edges()[e]);
        part_forbidden[e] = star_forbidden[star.edge_id(se.u, se.v)];
      }
      std::vector<Vertex> part_labels(static_cast<std::size_t>(part.graph.order()));
      for (Vertex x = 0; x < part.graph.order(); ++x) part_labels[x] = labels[red.star.parent(part.parent(x))];
      auto sub = colour(part.graph, part_labels, part_forbidden);
      if (!sub) return std::nullopt;
      part_colourings.push_back(std::move(sub->colouring));
      append(out, std::move(*sub));
    }

    ExtensionRecord record;
    if (parts.size() == 1) {
      Colouring star_colouring(star.size());
      lift_colouring(parts.front(), part_colourings.front(), star, star_colouring);
      auto ext = extend_colouring(g, split, config, red, star_colouring, k_, forbidden, options_);
      if (!ext) return std::nullopt;
      out.colouring = std::move(ext->colouring);
      record = ext->record;
    } else {
      auto comb = combine_components(g, split, config, red, parts, part_colourings, k_, forbidden, options_);
      if (!comb) return std::nullopt;
      out.colouring = std::move(comb->colouring);
      record = comb->record;
      comb->ledger.v = labels[comb->ledger.v];
      out.ledgers.push_back(std::move(comb->ledger));
    }
    record.v = labels[record.v];
    out.evaluations += record.evaluations;
    out.extensions.push_back(std::move(record));
    return out;
  }

  static void append(Outcome& into, Outcome&& from) {
    into.extensions.insert(into.extensions.end(), from.extensions.begin(), from.extensions.end());
    into.ledgers.insert(into.ledgers.end(), from.ledgers.begin(), from.ledgers.end());
    into.evaluations += from.evaluations;
    into.retries += from.retries;
    into.alternatives += from.alternatives;
  }

  int k_;
  EngineOptions options_;
  std::string failure_;
};

}  // namespace

ColouringResult anti_rainbow_colouring(const Graph& g, int k, const EngineOptions& options) {
  if (k < 5) throw DomainError("anti_rainbow_colouring needs k >= 5; use the K_4 procedure for k = 4");
  if (!is_single_kk_component(g, k)) throw DomainError("input is not a single K_" + std::to_string(k) + "-component");
  const auto densest = densest_subgraph(g);
  if (densest.density >= density_ceiling(k)) {
    throw DensityViolation("m(G) = " + densest.density.to_string() + " >= " + density_ceiling(k).to_string(),
                           densest.vertices, densest.density);
  }

  std::vector<Vertex> labels(static_cast<std::size_t>(g.order()));
  std::iota(labels.begin(), labels.end(), 0);
  Engine engine(k, options);
  auto outcome = engine.colour(g, labels, {});
  if (!outcome) throw InvariantViolation("colouring construction stuck " + engine.failure());

  ColouringResult result;
  result.colouring = outcome->colouring.canonical();
  auto& report = result.report;
  report.badness = badness(g, k);
  report.bound = bound_or_invariant(g, k);
  const auto stage = check_stage(g, result.colouring, k);
  if (!stage) throw InvariantViolation("final colouring leaves a rainbow K_" + std::to_string(k));
  report.stage = *stage;
  if (level(report.stage) > level(report.bound)) {
    throw InvariantViolation("reached " + to_string(report.stage) + " but badness " +
                             std::to_string(report.badness) + " promises " + to_string(report.bound));
  }
  report.extensions = std::move(outcome->extensions);
  report.ledgers = std::move(outcome->ledgers);
  report.evaluations = outcome->evaluations;
  report.retries = outcome->retries;
  report.alternative_vertices = outcome->alternatives;
  return result;
}

GraphColouring colour_graph_with_reports(const Graph& g, int k, const EngineOptions& options) {
  if (k < 5) throw DomainError("colour_graph needs k >= 5; use the K_4 procedure for k = 4");
  GraphColouring out;
  out.colouring = Colouring(g.size());
  const auto parts = kk_components(g, k);
  Colour offset = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& part = parts[i];
    ColouringResult res;
    try {
      res = anti_rainbow_colouring(part.graph, k, options);
    } catch (const DensityViolation& e) {
      VertexSet witness;
      for (const Vertex x : e.witness()) witness.push_back(part.parent(x));
      throw DensityViolation("K_" + std::to_string(k) + "-component " + std::to_string(i) + ": " + e.what(),
                             witness, e.density());
    }
    lift_colouring(part, res.colouring, g, out.colouring, offset);
    offset += res.colouring.max_colour();
    out.components.push_back(std::move(res.report));
  }
  out.colouring = out.colouring.canonical();
  return out;
}

Colouring colour_graph(const Graph& g, int k, const EngineOptions& options) {
  return colour_graph_with_reports(g, k, options).colouring;
}

nlohmann::json to_json(const StageReport& report) {
  auto extensions = nlohmann::json::array();
  for (const auto& e : report.extensions) {
    extensions.push_back({{"v", e.v},
                          {"config", e.config.label()},
                          {"components", e.components},
                          {"before", to_string(e.before)},
                          {"target", to_string(e.target)},
                          {"after", to_string(e.after)},
                          {"move", e.move},
                          {"evaluations", e.evaluations}});
  }
  auto ledgers = nlohmann::json::array();
  for (const auto& l : report.ledgers) {
    auto parts = nlohmann::json::array();
    for (std::size_t i = 0; i < l.component_badness.size(); ++i)
      parts.push_back({{"b", l.component_badness[i]}, {"bShared", l.shared_badness[i]}});
    ledgers.push_back({{"v", l.v},
                       {"config", l.config.label()},
                       {"parts", std::move(parts)},
                       {"bSum", l.b_sum},
                       {"hostBadness", l.host_badness},
                       {"kvBadness", l.kv_badness},
                       {"jmin", l.jmin ? nlohmann::json(to_string(*l.jmin)) : nlohmann::json(nullptr)},
                       {"sharedNonPositive", l.shared_nonpositive}});
  }
  return {{"stage", to_string(report.stage)},
          {"badness", report.badness},
          {"bound", to_string(report.bound)},
          {"extensions", std::move(extensions)},
          {"ledgers", std::move(ledgers)},
          {"evaluations", report.evaluations},
          {"retries", report.retries},
          {"alternativeVertices", report.alternative_vertices}};
}

}  // namespace antiramsey
