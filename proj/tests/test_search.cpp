#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "sqturan/canonical.hpp"
#include "sqturan/detector.hpp"
#include "sqturan/error.hpp"
#include "sqturan/graph_io.hpp"
#include "sqturan/search.hpp"

using namespace sqturan;

TEST(Exhaustive, SmallCompleteHosts) {
  // ell = 8 > n = 7: every graph is free, K7 is the unique optimizer.
  const auto r = exhaustive_extremal(8, 7, Objective::edges);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.best_value, 21.0);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(r.witnesses[0], canonical_form(complete_graph(7)));
  EXPECT_EQ(r.graphs_enumerated, 1044);
}

TEST(Exhaustive, KnownClassCounts) {
  const std::vector<std::int64_t> known{1, 2, 4, 11, 34, 156, 1044};
  const auto r = exhaustive_extremal(9, 7, Objective::edges);
  EXPECT_EQ(r.level_counts, known);
}

TEST(Exhaustive, AgreesWithBruteForceAtSix) {
  // All graphs on 6 vertices, deduplicated by the brute-force form.
  std::set<std::string> free_forms;
  int best = 0;
  for (int mask = 0; mask < (1 << 15); ++mask) {
    GraphBuilder b(6);
    int bit = 0;
    for (int u = 0; u < 6; ++u)
      for (int v = u + 1; v < 6; ++v, ++bit)
        if (mask >> bit & 1) b.add_edge(u, v);
    const Graph g = b.build();
    if (generic_subgraph_oracle(g, squared_cycle(6))) continue;
    free_forms.insert(oracle::brute_canonical_form(g));
    best = std::max(best, static_cast<int>(g.edge_count()));
  }
  const auto r = exhaustive_extremal(6, 6, Objective::edges);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.graphs_enumerated, static_cast<std::int64_t>(free_forms.size()));
  EXPECT_EQ(r.best_value, best);
  for (const auto& w : r.witnesses) EXPECT_FALSE(find_squared_cycle(from_graph6(w), 6).embedding);
}

TEST(Exhaustive, SpectralObjective) {
  const auto r = exhaustive_extremal(8, 7, Objective::spectral);
  EXPECT_NEAR(r.best_value, 6.0, 1e-9);
  ASSERT_EQ(r.witnesses.size(), 1u);
}

TEST(Exhaustive, BudgetGivesPartial) {
  ExhaustiveOptions tiny;
  tiny.node_limit = 50;
  const auto r = exhaustive_extremal(8, 8, Objective::edges, tiny);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_FALSE(r.gn_comparison.has_value());
}

TEST(Exhaustive, Parameters) {
  EXPECT_THROW(exhaustive_extremal(2, 5, Objective::edges), ParameterError);
  EXPECT_THROW(exhaustive_extremal(8, 11, Objective::edges), ParameterError);
  EXPECT_THROW(parse_objective("vertices"), ParameterError);
}

TEST(Hillclimb, ReachesApexTuranAtForty) {
  HillclimbOptions o;
  o.budget = 3000;
  const auto r = hillclimb_extremal(8, 40, Objective::edges, o);
  EXPECT_GE(r.best_value, 546.0);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_FALSE(find_squared_cycle(from_graph6(r.witnesses.front()), 8).embedding);
}

TEST(Hillclimb, Deterministic) {
  HillclimbOptions o;
  o.budget = 500;
  o.seed = 9;
  const auto a = hillclimb_extremal(8, 14, Objective::edges, o);
  const auto b = hillclimb_extremal(8, 14, Objective::edges, o);
  EXPECT_EQ(a.best_value, b.best_value);
  EXPECT_EQ(a.witnesses, b.witnesses);
  EXPECT_EQ(a.nodes, b.nodes);
}

TEST(Hillclimb, SpectralNotBelowApexTuran) {
  HillclimbOptions o;
  o.budget = 500;
  const auto r = hillclimb_extremal(8, 16, Objective::spectral, o);
  ASSERT_TRUE(r.gn_value.has_value());
  EXPECT_GE(r.best_value, *r.gn_value - 1e-9);
}

TEST(Consistency, Rows) {
  const auto rows = theorem_consistency({8}, 10, 24);
  EXPECT_EQ(rows.size(), 15u);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.ok()) << r.n;
    ASSERT_TRUE(r.gn_free.has_value());
    EXPECT_TRUE(r.turan3_free.has_value());
  }
  const auto nine = theorem_consistency({9}, 12, 12);
  ASSERT_EQ(nine.size(), 1u);
  EXPECT_FALSE(nine[0].gn_free.has_value());
  EXPECT_FALSE(nine[0].turan3_free.has_value());
  EXPECT_TRUE(nine[0].turan2_free);
}
