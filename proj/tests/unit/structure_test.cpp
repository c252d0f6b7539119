#include <gtest/gtest.h>

#include "antiramsey/corpus.hpp"
#include "antiramsey/errors.hpp"
#include "antiramsey/structure.hpp"
#include "builders.hpp"
#include "oracles.hpp"

using namespace antiramsey;

namespace {

// Closed forms written out independently of the library.
std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

std::int64_t edge_delta_formula(ConfigKind kind, int ell, int k) {
  switch (kind) {
    case ConfigKind::X: return choose2(ell) + ell * (k - ell);
    case ConfigKind::Y: return choose2(ell) + ell * (k - ell + 1);
    case ConfigKind::U: return k;
  }
  return 0;
}

std::int64_t direct_badness(const Graph& g, int k) {
  return 2 * static_cast<std::int64_t>(g.size()) - (k + 1) * static_cast<std::int64_t>(g.order()) + 2 * k;
}

}  // namespace

TEST(Badness, Examples) {
  EXPECT_EQ(badness(complete_graph(5), 5), 0);
  EXPECT_EQ(badness(complete_minus_edge(6, 4, 5), 5), 2);
  EXPECT_EQ(badness(complete_graph(6), 5), 4);
  for (int k = 4; k <= 9; ++k) EXPECT_EQ(badness(complete_graph(k), k), 0);
}

TEST(Components, SharedEdgeJoinsSharedVertexDoesNot) {
  const auto joined = kk_components(builders::two_sharing_edge(5), 5);
  ASSERT_EQ(joined.size(), 1u);
  EXPECT_EQ(joined[0].graph.order(), 8);
  EXPECT_EQ(kk_components(disjoint_union(complete_graph(5), complete_graph(5)), 5).size(), 2u);
  EXPECT_EQ(kk_components(builders::two_sharing_vertex(5), 5).size(), 2u);
  EXPECT_TRUE(is_single_kk_component(builders::two_sharing_edge(5), 5));
  EXPECT_FALSE(is_single_kk_component(builders::two_sharing_vertex(5), 5));
}

TEST(Components, StripsEdgesOutsideCliques) {
  const auto g = builders::glue(complete_graph(5), builders::from_edges(3, {{0, 1}, {1, 2}}), {{0, 0}});
  const auto comps = kk_components(g, 5);
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].graph.size(), 10u);
  EXPECT_FALSE(is_single_kk_component(g, 5));
}

TEST(MinDegree, SmallestIndexOnTies) {
  EXPECT_EQ(min_degree_vertex(complete_graph(5)), 0);
  EXPECT_EQ(min_degree_vertex(builders::from_edges(4, {{0, 1}, {0, 2}, {0, 3}})), 1);
  EXPECT_EQ(min_degree_vertex(builders::from_edges(3, {{0, 1}, {1, 2}})), 0);
}

TEST(Split, PrivateVertexOfGluedPair) {
  const auto g = builders::two_sharing_edge(5);
  const auto v = min_degree_vertex(g);
  const auto s = split_neighbourhood(g, v, 5);
  EXPECT_EQ(s.private_part, (VertexSet{2, 3, 4}));
  EXPECT_EQ(s.shared_part, (VertexSet{0, 1}));
  EXPECT_EQ(classify_kv(s, g), (KvConfig{ConfigKind::X, 3}));
}

TEST(Split, CompleteGraphOnePastK) {
  const auto g = complete_graph(6);
  for (Vertex v = 0; v < 6; ++v) {
    const auto s = split_neighbourhood(g, v, 5);
    EXPECT_EQ(s.private_part, (VertexSet{v}));
    EXPECT_EQ(s.shared_part.size(), 5u);
    EXPECT_EQ(classify_kv(s, g), (KvConfig{ConfigKind::U, 1}));
  }
}

TEST(Split, RejectsVerticesOutsideCliques) {
  const auto g = builders::glue(complete_graph(5), builders::from_edges(2, {{0, 1}}), {{0, 0}});
  EXPECT_THROW(split_neighbourhood(g, 5, 5), DomainError);
}

TEST(Classify, ConfigurationFixturesForKFive) {
  const auto fixtures = figure1_fixtures(5);
  ASSERT_EQ(fixtures.size(), 7u);
  std::vector<std::string> labels;
  for (const auto& f : fixtures) {
    ASSERT_TRUE(f.vertex && f.expected_config);
    EXPECT_EQ(min_degree_vertex(f.graph), *f.vertex);
    const auto split = split_neighbourhood(f.graph, *f.vertex, 5);
    EXPECT_EQ(classify_kv(split, f.graph), *f.expected_config) << f.recipe.dump();
    labels.push_back(f.expected_config->label());
    if (*f.expected_config == KvConfig{ConfigKind::X, 2}) {
      EXPECT_EQ(split.private_part.size(), 2u);
      EXPECT_EQ(split.shared_part.size(), 3u);
    }
  }
  EXPECT_EQ(labels, (std::vector<std::string>{"X1", "X2", "X3", "Y1", "Y2", "Y3", "U1"}));
}

TEST(Classify, FixturesForLargerK) {
  for (int k = 6; k <= 8; ++k) {
    const auto fixtures = figure1_fixtures(k);
    EXPECT_EQ(fixtures.size(), static_cast<std::size_t>(2 * (k - 2) + 1));
    for (const auto& f : fixtures) {
      const auto split = split_neighbourhood(f.graph, *f.vertex, k);
      EXPECT_EQ(classify_kv(split, f.graph), *f.expected_config) << k << " " << f.recipe.dump();
    }
  }
}

TEST(Classify, CliquesSharingATriangle) {
  const auto g = builders::glue(complete_graph(5), complete_graph(5), {{0, 0}, {1, 1}, {2, 2}});
  // A private vertex sees a plain K_5 whose shared part is the triangle.
  EXPECT_EQ(classify_kv(split_neighbourhood(g, min_degree_vertex(g), 5), g), KvConfig::parse("X2"));
  // A shared vertex has seven vertices in K(v), which fits no admissible shape.
  EXPECT_THROW(classify_kv(split_neighbourhood(g, 0, 5), g), ClassificationError);
}

TEST(Classify, LabelsRoundTrip) {
  for (const char* label : {"X1", "X3", "Y2", "U1"}) EXPECT_EQ(KvConfig::parse(label).label(), label);
  EXPECT_THROW(KvConfig::parse("Z1"), DomainError);
}

TEST(Reduce, EdgeDeltaOfGluedPair) {
  const auto g = builders::two_sharing_edge(5);
  const auto split = split_neighbourhood(g, min_degree_vertex(g), 5);
  const auto r = reduce(g, split, 5);
  EXPECT_EQ(r.star.graph.size(), 10u);
  EXPECT_EQ(r.reduced, r.star.graph);
  EXPECT_EQ(r.extra_edges, 0u);
  EXPECT_EQ(g.size() - r.star.graph.size(), 9u);
}

TEST(Reduce, CompleteGraphLosesKEdges) {
  const auto g = complete_graph(6);
  const auto r = reduce(g, split_neighbourhood(g, 0, 5), 5);
  EXPECT_EQ(r.reduced, complete_graph(5));
  EXPECT_EQ(g.size() - r.star.graph.size(), 5u);
}

TEST(Reduce, OneSidedFixtureEdgeDelta) {
  for (const auto& f : figure1_fixtures(5)) {
    if (!(*f.expected_config == KvConfig{ConfigKind::Y, 1})) continue;
    const auto r = reduce(f.graph, split_neighbourhood(f.graph, *f.vertex, 5), 5);
    EXPECT_EQ(static_cast<std::int64_t>(f.graph.size() - r.star.graph.size()), 5);
  }
}

TEST(Deltas, TablesMatchClosedForms) {
  for (int k = 4; k <= 10; ++k) {
    for (int ell = 1; ell <= k - 2; ++ell) {
      for (const auto kind : {ConfigKind::X, ConfigKind::Y}) {
        const KvConfig c{kind, ell};
        EXPECT_EQ(expected_edge_delta(c, k), edge_delta_formula(kind, ell, k));
        // b(G) - b(G*) = 2 * edge delta - (k+1) * |R(v)|
        EXPECT_EQ(expected_badness_delta(c, k), 2 * edge_delta_formula(kind, ell, k) - (k + 1) * ell);
      }
    }
    EXPECT_EQ(expected_edge_delta({ConfigKind::U, 1}, k), k);
    EXPECT_EQ(expected_badness_delta({ConfigKind::U, 1}, k), k - 1);
  }
}

TEST(Peel, ChainOfThree) {
  const auto g = builders::clique_chain(5, 3);
  EXPECT_EQ(g.order(), 11);
  EXPECT_EQ(badness(g, 5), 0);
  const auto t = peel_trace(g, 5);
  ASSERT_EQ(t.steps.size(), 2u);
  for (const auto& s : t.steps) {
    EXPECT_EQ(s.config, (KvConfig{ConfigKind::X, 3}));
    EXPECT_EQ(s.badness_delta, 0);
  }
  EXPECT_EQ(t.residue.size(), 5u);
  EXPECT_TRUE(t.branches.empty());
}

TEST(Peel, CompleteGraphSteps) {
  const auto t = peel_trace(complete_graph(6), 5);
  ASSERT_EQ(t.steps.size(), 1u);
  EXPECT_EQ(t.steps[0].config.label(), "U1");
  EXPECT_EQ(t.steps[0].badness_delta, 4);
  EXPECT_EQ(t.residue.size(), 5u);
  const auto base = peel_trace(complete_graph(5), 5);
  EXPECT_TRUE(base.steps.empty());
  EXPECT_EQ(base.residue, (VertexSet{0, 1, 2, 3, 4}));
}

TEST(Peel, RejectsDenseOrSplitInput) {
  EXPECT_THROW(peel_trace(complete_graph(7), 5), DensityViolation);
  EXPECT_THROW(peel_trace(builders::two_sharing_vertex(5), 5), DomainError);
  EXPECT_THROW(peel_trace(complete_graph(5), 4), DomainError);
}

TEST(Peel, JsonShape) {
  const auto j = to_json(peel_trace(builders::two_sharing_edge(5), 5));
  ASSERT_EQ(j["steps"].size(), 1u);
  const auto& step = j["steps"][0];
  EXPECT_EQ(step["config"], "X3");
  EXPECT_EQ(step["edgeDelta"], 9);
  EXPECT_EQ(step["extraEdges"], 0);
  EXPECT_EQ(step["bDelta"], 0);
  EXPECT_EQ(step["v"], 2);
}

TEST(Peel, LedgerConservesBadnessOnCorpus) {
  CorpusParams p;
  p.count = 150;
  for (const auto kind : {CorpusKind::GluingMix, CorpusKind::CliqueChain, CorpusKind::RandomSparse}) {
    for (int k = 5; k <= 7; ++k) {
      for (const auto& item : corpus(kind, k, p, 11)) {
        for (const auto& comp : kk_components(item.graph, k)) {
          const auto t = peel_trace(comp.graph, k);
          EXPECT_EQ(ledger_total(t, k, Ledger::Standard), direct_badness(comp.graph, k)) << item.recipe.dump();
        }
      }
    }
  }
}

TEST(Peel, BadnessStaysBelowTwoK) {
  CorpusParams p;
  p.count = 200;
  for (int k = 5; k <= 8; ++k)
    for (const auto& item : corpus(CorpusKind::GluingMix, k, p, 3)) {
      const auto b = badness(item.graph, k);
      EXPECT_GE(b, 0);
      EXPECT_LT(b, 2 * k);
      ASSERT_TRUE(item.predicted_badness);
      EXPECT_EQ(b, *item.predicted_badness);
    }
}

TEST(CliqueIncidence, CycleOfCliquesIsDetected) {
  const auto star = builders::glue(builders::two_sharing_edge(5), complete_graph(5), {{0, 0}, {1, 1}});
  EXPECT_TRUE(clique_chains_acyclic(star, 5));
  // Four K_5's in a ring, consecutive ones sharing one edge: {0,1}, {2,3}, {4,5}, {6,7}.
  std::vector<Edge> edges;
  const std::vector<VertexSet> ring = {{6, 7, 0, 1, 8}, {0, 1, 2, 3, 9}, {2, 3, 4, 5, 10}, {4, 5, 6, 7, 11}};
  for (const auto& c : ring)
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) edges.push_back(make_edge(c[i], c[j]));
  const Graph cycle(12, edges);
  EXPECT_EQ(oracle::cliques(cycle, 5).size(), 4u);
  EXPECT_FALSE(clique_chains_acyclic(cycle, 5));
  EXPECT_TRUE(clique_chains_acyclic(builders::clique_chain(5, 4), 5));
}

TEST(CliqueIncidence, LowBadnessComponentsHaveNoCycles) {
  CorpusParams p;
  p.count = 300;
  std::size_t low = 0;
  for (int k = 5; k <= 7; ++k)
    for (const auto kind : {CorpusKind::GluingMix, CorpusKind::CliqueChain, CorpusKind::RandomSparse})
      for (const auto& item : corpus(kind, k, p, 17))
        for (const auto& comp : kk_components(item.graph, k)) {
          if (badness(comp.graph, k) > k - 4) continue;
          ++low;
          EXPECT_TRUE(clique_chains_acyclic(comp.graph, k)) << item.recipe.dump();
        }
  EXPECT_GT(low, 500u);
}
