#include <gtest/gtest.h>

#include <set>

#include "antiramsey/errors.hpp"
#include "antiramsey/k4.hpp"
#include "antiramsey/oracle.hpp"
#include "antiramsey/random.hpp"
#include "builders.hpp"
#include "oracles.hpp"

using namespace antiramsey;

TEST(CompleteColouring, FreshSinglesForBlankEdges) {
  const auto g = complete_graph(5);
  Colouring c(g.size());
  c.set(g.edge_id(0, 1), 1);
  c.set(g.edge_id(2, 3), 1);
  const auto full = complete_colouring(g, c);
  EXPECT_EQ(full.coloured_count(), 10u);
  EXPECT_TRUE(is_proper(g, full));
  std::multiset<Colour> used(full.raw().begin(), full.raw().end());
  EXPECT_EQ(used.count(1), 2u);
  EXPECT_EQ(std::set<Colour>(full.raw().begin(), full.raw().end()).size(), 9u);
}

TEST(CompleteColouring, TotalColouringUnchangedAndPathGetsTwoColours) {
  const auto k3 = complete_graph(3);
  const Colouring total(std::vector<Colour>{1, 2, 3});
  EXPECT_EQ(complete_colouring(k3, total), total);
  const auto path = builders::from_edges(3, {{0, 1}, {1, 2}});
  const auto full = complete_colouring(path, Colouring(path.size()));
  EXPECT_EQ(full.coloured_count(), 2u);
  EXPECT_NE(full[0], full[1]);
  EXPECT_THROW(complete_colouring(path, Colouring(std::vector<Colour>{4, 4})), DomainError);
}

TEST(RainbowSearch, FindsAndMisses) {
  const auto g = complete_graph(4);
  const auto w = find_rainbow_clique(g, Colouring(std::vector<Colour>{1, 2, 3, 4, 5, 6}), 4);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->clique, (VertexSet{0, 1, 2, 3}));
  Colouring pair(g.size());
  pair.set(g.edge_id(0, 1), 1);
  pair.set(g.edge_id(2, 3), 1);
  EXPECT_FALSE(find_rainbow_clique(g, pair, 4).has_value());
}

TEST(Forced, WitnessJAndCliques) {
  EXPECT_TRUE(forced_rainbow(witness_j(), 4));
  EXPECT_FALSE(forced_rainbow(complete_graph(4), 4));
  EXPECT_FALSE(forced_rainbow(complete_graph(5), 4));
  EXPECT_FALSE(oracle::exists_non_rainbow_partition(oracle::j_graph(), 4));
  EXPECT_TRUE(oracle::exists_non_rainbow_partition(complete_graph(5), 4));
}

TEST(Forced, AvoidingColouringsAreValid) {
  const auto k5 = complete_graph(5);
  const auto c = brute_force_no_rainbow_colouring(k5, 4);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->coloured_count(), k5.size());
  EXPECT_TRUE(oracle::proper(k5, c->raw()));
  EXPECT_FALSE(oracle::rainbow_clique(k5, c->raw(), 4));
  EXPECT_FALSE(brute_force_no_rainbow_colouring(witness_j(), 4).has_value());
  const auto tri = complete_graph(3);
  const auto t = brute_force_no_rainbow_colouring(tri, 4);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->coloured_count(), 3u);
}

TEST(Forced, EveryEdgeOfWitnessJIsNeeded) {
  const auto j = witness_j();
  for (std::size_t drop = 0; drop < j.size(); ++drop) {
    std::vector<Edge> edges = j.edges();
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(drop));
    const Graph h(7, edges);
    const auto c = brute_force_no_rainbow_colouring(h, 4);
    ASSERT_TRUE(c.has_value()) << drop;
    EXPECT_FALSE(oracle::rainbow_clique(h, c->raw(), 4));
  }
}

TEST(Forced, AgreesWithPartitionEnumeration) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto g = gnp(7, 0.45, seed);
    if (g.size() > 11) continue;
    for (int k = 3; k <= 4; ++k) {
      EXPECT_EQ(brute_force_no_rainbow_colouring(g, k).has_value(), oracle::exists_non_rainbow_partition(g, k))
          << seed << " k=" << k;
      ++checked;
    }
  }
  EXPECT_GT(checked, 40);
}

TEST(CountColourings, MatchesPartitionCount) {
  EXPECT_EQ(count_proper_colourings(complete_graph(4)), 8u);
  EXPECT_EQ(oracle::count_matching_partitions(complete_graph(4)), 8u);
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto g = gnp(6, 0.5, seed);
    EXPECT_EQ(count_proper_colourings(g), oracle::count_matching_partitions(g)) << seed;
  }
}

TEST(Guard, RejectsLargeInputs) {
  const auto g = complete_graph(8);  // 28 edges
  EXPECT_THROW(brute_force_no_rainbow_colouring(g, 4), GuardExceeded);
  OracleGuard tight;
  tight.max_edges = 5;
  EXPECT_THROW(forced_rainbow(complete_graph(4), 4, tight), GuardExceeded);
}

TEST(Witness, Serialises) {
  const auto g = complete_graph(4);
  const auto w = find_rainbow_clique(g, Colouring(std::vector<Colour>{1, 2, 3, 4, 5, 6}), 4);
  const auto j = to_json(*w);
  EXPECT_EQ(j["clique"], nlohmann::json({0, 1, 2, 3}));
  EXPECT_EQ(j["colours"].size(), 6u);
}
