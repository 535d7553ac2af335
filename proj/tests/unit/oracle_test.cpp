#include <gtest/gtest.h>

#include <random>

#include "degen/enumeration.hpp"
#include "degen/generators.hpp"
#include "degen/oracle.hpp"
#include "oracles.hpp"

namespace degen {
namespace {

TEST(Oracle, NamedOptima) {
  EXPECT_EQ(min_deletion_exact(named_graph("icosahedron").graph()).optimum, 1u);
  EXPECT_EQ(min_deletion_exact(named_graph("octahedron").graph()).optimum, 0u);
  EXPECT_EQ(min_deletion_exact(named_graph("octahedron").graph(), 2).optimum, 2u);
  EXPECT_EQ(min_deletion_exact(testing::complete_graph(7), 4).optimum, 2u);
}

TEST(Oracle, WitnessIsValid) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = random_triangulation(14, seed).graph();
    for (int k : {2, 3, 4}) {
      const OracleResult r = min_deletion_exact(g, k);
      ASSERT_TRUE(r.optimal);
      ASSERT_EQ(r.witness.size(), r.optimum);
      Graph rest = g;
      for (VertexId v : r.witness) rest.remove_vertex(v);
      EXPECT_TRUE(testing::reference_degenerate(rest, k));
    }
  }
}

TEST(Oracle, MatchesSubsetEnumeration) {
  for (std::size_t n = 8; n <= 11; ++n)
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const Graph g = random_triangulation(n, seed).graph();
      for (int k : {2, 3}) EXPECT_EQ(min_deletion_exact(g, k).optimum, testing::brute_force_min_deletion(g, k));
    }
  // Small triangulations are 4-degenerate; the interesting ones are the 3 case.
  for (const auto& eg : all_triangulations(9))
    ASSERT_EQ(min_deletion_exact(eg.graph(), 3).optimum, testing::brute_force_min_deletion(eg.graph(), 3));
}

TEST(Oracle, BudgetGivesUpperBound) {
  const Graph g = random_triangulation(40, 2, 5).graph();
  const OracleResult r = min_deletion_exact(g, 3, 10);
  EXPECT_FALSE(r.optimal);
  Graph rest = g;
  for (VertexId v : r.witness) rest.remove_vertex(v);
  EXPECT_TRUE(testing::reference_degenerate(rest, 3));
}

TEST(Oracle, RejectsLargeInputs) {
  EXPECT_THROW(min_deletion_exact(testing::random_tree(kOracleMaxOrder + 1, 1)), std::invalid_argument);
}

TEST(Oracle, SandwichOnSmallGraphs) {
  for (const auto& name : named_graph_names()) {
    const auto r = compare_extract_to_oracle(named_graph(name).graph());
    EXPECT_TRUE(r.pass) << name << ": " << r.violation;
  }
}

TEST(Oracle, CollectOrWitnessTally) {
  Theorem2Summary s;
  for (const auto& eg : all_triangulations(12)) tally_theorem2(s, eg.graph(), true);
  tally_theorem2(s, testing::complete_graph(5), false);
  tally_theorem2(s, testing::complete_graph(4), true);
  EXPECT_EQ(s.graphs, 7595u + 2u);
  EXPECT_EQ(s.skipped_nonplanar, 1u);
  EXPECT_EQ(s.skipped_small, 1u);
  EXPECT_EQ(s.collect_all + s.witness, 7595u);
  EXPECT_EQ(s.witness, 1u);  // only the icosahedron is not 4-degenerate
}

}  // namespace
}  // namespace degen
