#include <gtest/gtest.h>

#include "antiramsey/corpus.hpp"
#include "antiramsey/density.hpp"
#include "antiramsey/errors.hpp"
#include "antiramsey/k4.hpp"
#include "builders.hpp"
#include "oracles.hpp"

using namespace antiramsey;

TEST(K4Badness, Examples) {
  EXPECT_EQ(badness_k4(complete_graph(4)), 0);
  EXPECT_EQ(badness_k4(complete_graph(5)), 13);
  EXPECT_EQ(badness_k4(witness_j()), 18);
}

TEST(WitnessJ, Shape) {
  const auto j = witness_j();
  EXPECT_EQ(j.order(), 7);
  EXPECT_EQ(j.size(), 15u);
  EXPECT_EQ(j, oracle::j_graph());
  EXPECT_EQ(max_density(j), Rational(15, 7));
  EXPECT_EQ(oracle::max_density(j), Rational(15, 7));
  EXPECT_EQ(k4_density_ceiling(), Rational(15, 7));
}

TEST(K4Peel, CompleteFive) {
  const auto t = peel_trace_k4(complete_graph(5));
  ASSERT_EQ(t.steps.size(), 1u);
  EXPECT_EQ(t.steps[0].config.label(), "U1");
  EXPECT_EQ(t.steps[0].badness_delta, 13);
}

TEST(K4Peel, TwoGluedOnAnEdge) {
  const auto g = builders::two_sharing_edge(4);
  const auto t = peel_trace_k4(g);
  ASSERT_EQ(t.steps.size(), 1u);
  EXPECT_EQ(t.steps[0].config.label(), "X2");
  EXPECT_EQ(t.steps[0].badness_delta, 5);
  EXPECT_EQ(ledger_total(t, 4, Ledger::K4), badness_k4(g));
}

TEST(K4Peel, SingleVertexStepBranches) {
  // v = 0 sits in the K_4 {0,1,2,3}; K_4's on {1,2} and {2,3} hang off its triangle.
  auto g = complete_graph(4);
  g = builders::glue(g, complete_graph(4), {{1, 0}, {2, 1}});
  g = builders::glue(g, complete_graph(4), {{2, 0}, {3, 1}});
  ASSERT_EQ(min_degree_vertex(g), 0);
  const auto t = peel_trace_k4(g);
  ASSERT_EQ(t.steps.size(), 1u);
  EXPECT_EQ(t.steps[0].config.label(), "X1");
  EXPECT_EQ(t.steps[0].badness_delta, 6);
  EXPECT_EQ(t.steps[0].extra_edges, 1);
  EXPECT_EQ(t.branches.size(), 2u);
  // Direct count: G has 16 edges on 8 vertices.
  EXPECT_EQ(badness_k4(g), 7 * 16 - 15 * 8 + 18);
  EXPECT_EQ(ledger_total(t, 4, Ledger::K4), badness_k4(g));
}

TEST(K4Colouring, BaseCases) {
  const auto k4 = complete_graph(4);
  const auto r = anti_rainbow_colouring_k4(k4);
  EXPECT_EQ(r.colouring.coloured_count(), 2u);
  EXPECT_FALSE(oracle::rainbow_clique(k4, r.colouring.raw(), 4));
  const auto k5 = complete_graph(5);
  const auto r5 = anti_rainbow_colouring_k4(k5);
  EXPECT_TRUE(is_proper(k5, r5.colouring));
  EXPECT_FALSE(oracle::rainbow_clique(k5, r5.colouring.raw(), 4));
  EXPECT_THROW(anti_rainbow_colouring_k4(witness_j()), DensityViolation);
}

TEST(K4Colouring, TriangleCaps) {
  EXPECT_EQ(k4_triangle_cap(0), 1);
  EXPECT_EQ(k4_triangle_cap(5), 1);
  EXPECT_EQ(k4_triangle_cap(6), 2);
  EXPECT_EQ(k4_triangle_cap(11), 2);
  EXPECT_EQ(k4_triangle_cap(12), 3);
}

TEST(K4Components, VertexBound) {
  EXPECT_EQ(component_vertex_bound_check(complete_graph(4)), 4);
  EXPECT_EQ(component_vertex_bound_check(builders::two_sharing_edge(4)), 6);
}

TEST(K4Colouring, CorpusComponents) {
  CorpusParams p;
  p.count = 150;
  std::size_t components = 0;
  for (const auto kind : {CorpusKind::GluingMix, CorpusKind::CliqueChain, CorpusKind::RandomSparse}) {
    for (const auto& item : corpus(kind, 4, p, 13)) {
      const auto c = colour_graph_k4(item.graph);
      ASSERT_TRUE(is_proper(item.graph, c));
      EXPECT_FALSE(oracle::rainbow_clique(item.graph, c.raw(), 4)) << item.recipe.dump();
      for (const auto& comp : kk_components(item.graph, 4)) {
        ++components;
        EXPECT_LE(comp.graph.order(), 10);
        EXPECT_LT(badness_k4(comp.graph), 18);
        const auto r = anti_rainbow_colouring_k4(comp.graph);
        EXPECT_TRUE(satisfies_k4_invariants(comp.graph, r.colouring));
        for (const auto& s : peel_trace_k4(comp.graph).steps) {
          const auto label = s.config.label();
          const std::int64_t expected = label == "X1" ? 6 : label == "X2" ? 5 : 13;
          EXPECT_TRUE(label == "X1" || label == "X2" || label == "U1") << label;
          EXPECT_EQ(s.badness_delta, expected);
        }
      }
    }
  }
  EXPECT_GT(components, 400u);
}
