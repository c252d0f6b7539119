#include "antiramsey/k4.hpp"

#include <algorithm>
#include <numeric>

#include "antiramsey/cliques.hpp"
#include "antiramsey/density.hpp"
#include "antiramsey/errors.hpp"
#include "antiramsey/stage.hpp"
#include "extension_search.hpp"

namespace antiramsey {

namespace {

constexpr std::size_t kStepBudget = 200000;

void require_sparse_component(const Graph& g) {
  if (!is_single_kk_component(g, 4)) throw DomainError("input is not a single K_4-component");
  const auto densest = densest_subgraph(g);
  if (densest.density >= k4_density_ceiling()) {
    throw DensityViolation("m(G) = " + densest.density.to_string() + " >= 15/7", densest.vertices,
                           densest.density);
  }
}

/// Number of coloured edges on the worst triangle touched by `paints`, or on
/// any triangle when `paints` is empty.
int max_coloured_triangle(const Graph& g, const Colouring& c, std::span<const EdgePaint> paints) {
  auto coloured = [&](Vertex a, Vertex b) {
    const auto id = g.edge_id(a, b);
    if (c.is_coloured(id)) return 1;
    for (const auto& p : paints)
      if (p.edge == id) return 1;
    return 0;
  };
  int best = 0;
  auto scan_edge = [&](const Edge& e) {
    for (const Vertex w : g.neighbours(e.u))
      if (g.adjacent(w, e.v)) best = std::max(best, coloured(e.u, e.v) + coloured(e.u, w) + coloured(e.v, w));
  };
  if (paints.empty()) {
    for (const auto& e : g.edges()) scan_edge(e);
  } else {
    for (const auto& p : paints) scan_edge(g.edges()[p.edge]);
  }
  return best;
}

/// The five colour classes {i+1, i+4}, {i+2, i+3} (mod 5) of K_5. The K_4
/// avoiding vertex i contains both edges of class i.
Colouring matching_classes_k5(const Graph& g) {
  Colouring c(g.size());
  for (Vertex i = 0; i < 5; ++i) {
    c.set(g.edge_id((i + 1) % 5, (i + 4) % 5), static_cast<Colour>(i + 1));
    c.set(g.edge_id((i + 2) % 5, (i + 3) % 5), static_cast<Colour>(i + 1));
  }
  return c;
}

class K4Engine {
 public:
  struct Outcome {
    Colouring colouring;
    std::vector<std::size_t> degrees;
    std::vector<std::string> configs;
    std::size_t retries = 0;
    std::size_t evaluations = 0;
  };

  std::optional<Outcome> colour(const Graph& g, const std::vector<bool>& forbidden) {
    const bool unconstrained = std::none_of(forbidden.begin(), forbidden.end(), [](bool b) { return b; });
    if (g.order() == 4) return base_case(g, forbidden);
    if (g.order() == 5 && is_complete(g) && unconstrained) {
      Outcome out;
      out.colouring = matching_classes_k5(g);
      out.degrees.push_back(4);
      out.configs.push_back("U1");
      return out;
    }

    const auto d = g.degree(min_degree_vertex(g));
    std::size_t attempts = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) != d) continue;
      const auto split = split_neighbourhood(g, v, 4);
      KvConfig config;
      try {
        config = classify_kv(split, g);
      } catch (const ClassificationError& e) {
        note(e.what());
        continue;
      }
      if (config.kind == ConfigKind::Y) {
        note("configuration " + config.label() + " at v=" + std::to_string(v) + " is outside {X1, X2, U1}");
        continue;
      }
      const auto red = reduce(g, split, 4);
      const auto parts = kk_components(red.reduced, 4);
      for (const bool keep_shared_uncoloured : {true, false}) {
        auto out = attempt(g, split, config, red, parts, forbidden, keep_shared_uncoloured);
        if (out) {
          out->retries += attempts;
          return out;
        }
        ++attempts;
      }
    }
    return std::nullopt;
  }

  [[nodiscard]] const std::string& failure() const noexcept { return failure_; }

 private:
  void note(const std::string& why) {
    if (failure_.empty()) failure_ = why;
  }

  static std::optional<Outcome> base_case(const Graph& g, const std::vector<bool>& forbidden) {
    const auto& edges = g.edges();
    for (std::size_t a = 0; a < edges.size(); ++a) {
      for (std::size_t b = a + 1; b < edges.size(); ++b) {
        if (forbidden[a] || forbidden[b] || !edges[a].disjoint_from(edges[b])) continue;
        Outcome out;
        out.colouring = Colouring(g.size());
        out.colouring.set(a, 1);
        out.colouring.set(b, 1);
        return out;
      }
    }
    return std::nullopt;
  }

  std::optional<Outcome> attempt(const Graph& g, const NeighbourhoodSplit& split, const KvConfig& config,
                                 const Reduction& red, const std::vector<Subgraph>& parts,
                                 const std::vector<bool>& forbidden, bool keep_shared_uncoloured) {
    const Graph& star = red.star.graph;
    const auto in_s = detail::membership(g.order(), split.shared_part);
    Outcome out;
    Colouring star_colouring(star.size());
    Colour offset = 0;
    for (const auto& part : parts) {
      std::vector<bool> part_forbidden(part.graph.size(), false);
      for (std::size_t e = 0; e < part.graph.size(); ++e) {
        const Edge in_g = red.star.parent(part.parent(part.graph.edges()[e]));
        part_forbidden[e] = forbidden[g.edge_id(in_g.u, in_g.v)] ||
                            (keep_shared_uncoloured && in_s[in_g.u] && in_s[in_g.v]);
      }
      auto sub = colour(part.graph, part_forbidden);
      if (!sub) return std::nullopt;
      lift_colouring(part, sub->colouring, star, star_colouring, offset);
      offset += sub->colouring.max_colour();
      out.degrees.insert(out.degrees.end(), sub->degrees.begin(), sub->degrees.end());
      out.configs.insert(out.configs.end(), sub->configs.begin(), sub->configs.end());
      out.retries += sub->retries;
      out.evaluations += sub->evaluations;
    }
    Colouring lifted(g.size());
    lift_colouring(red.star, star_colouring, g, lifted);

    const StageEvaluator ev(g, 4);
    const auto state = ev.prepare(lifted);
    const int cap = k4_triangle_cap(badness_k4(g));
    auto accept = [&](std::span<const EdgePaint> paints) {
      const auto summary = ev.summarise_with(state, paints);
      if (!summary.stage) return false;
      if (cap >= 3) return true;
      return max_coloured_triangle(g, lifted, {}) <= cap && max_coloured_triangle(g, lifted, paints) <= cap;
    };
    detail::ExtensionSearch search(ev, state, detail::candidate_edges(g, split, lifted, forbidden),
                                   detail::local_palette(g, split, lifted), lifted.max_colour() + 1, accept,
                                   kStepBudget);
    const auto found = search.run();
    out.evaluations += search.evaluations();
    if (!found) return std::nullopt;
    out.colouring = detail::apply_paints(std::move(lifted), found->paints);
    out.degrees.push_back(g.degree(split.v));
    out.configs.push_back(config.label());
    return out;
  }

  std::string failure_;
};

}  // namespace

std::int64_t badness_k4(const Graph& g) {
  return 7 * static_cast<std::int64_t>(g.size()) - 15 * static_cast<std::int64_t>(g.order()) + 18;
}

Rational k4_density_ceiling() { return Rational(15, 7); }

Graph witness_j() {
  std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
  for (Vertex a = 0; a < 3; ++a)
    for (Vertex w = 3; w < 7; ++w) edges.push_back({a, w});
  return Graph(7, std::move(edges));
}

PeelTrace peel_trace_k4(const Graph& g) {
  require_sparse_component(g);
  return peel_with_ledger(g, 4, Ledger::K4);
}

int k4_triangle_cap(std::int64_t b_k4) {
  if (b_k4 < 6) return 1;
  if (b_k4 < 12) return 2;
  return 3;
}

bool satisfies_k4_invariants(const Graph& g, const Colouring& c) {
  if (!is_proper(g, c) || !check_stage(g, c, 4)) return false;
  return max_coloured_triangle(g, c, {}) <= k4_triangle_cap(badness_k4(g));
}

nlohmann::json to_json(const K4Report& report) {
  return {{"badness", report.badness},
          {"peelDegrees", report.peel_degrees},
          {"configs", report.configs},
          {"retries", report.retries},
          {"evaluations", report.evaluations}};
}

K4ColouringResult anti_rainbow_colouring_k4(const Graph& g) {
  require_sparse_component(g);
  K4Engine engine;
  auto out = engine.colour(g, std::vector<bool>(g.size(), false));
  if (!out) throw InvariantViolation("K_4 colouring construction stuck: " + engine.failure());
  K4ColouringResult result;
  result.colouring = out->colouring.canonical();
  if (!satisfies_k4_invariants(g, result.colouring)) {
    throw InvariantViolation("K_4 colouring violates the non-rainbow or triangle invariants");
  }
  result.report.badness = badness_k4(g);
  result.report.peel_degrees = std::move(out->degrees);
  result.report.configs = std::move(out->configs);
  result.report.retries = out->retries;
  result.report.evaluations = out->evaluations;
  return result;
}

Colouring colour_graph_k4(const Graph& g) {
  Colouring out(g.size());
  Colour offset = 0;
  const auto parts = kk_components(g, 4);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& part = parts[i];
    K4ColouringResult res;
    try {
      res = anti_rainbow_colouring_k4(part.graph);
    } catch (const DensityViolation& e) {
      VertexSet witness;
      for (const Vertex x : e.witness()) witness.push_back(part.parent(x));
      throw DensityViolation("K_4-component " + std::to_string(i) + ": " + e.what(), witness, e.density());
    }
    lift_colouring(part, res.colouring, g, out, offset);
    offset += res.colouring.max_colour();
  }
  return out.canonical();
}

Vertex component_vertex_bound_check(const Graph& g) {
  require_sparse_component(g);
  if (g.order() > 10) {
    throw InvariantViolation("K_4-component with m < 15/7 on " + std::to_string(g.order()) + " > 10 vertices");
  }
  return g.order();
}

}  // namespace antiramsey
