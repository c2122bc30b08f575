#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sqturan/coloring.hpp"
#include "sqturan/error.hpp"

using namespace sqturan;

namespace {

std::vector<int> vs(std::initializer_list<int> one_based) {
  std::vector<int> out;
  for (int j : one_based) out.push_back(j - 1);
  return out;
}

}  // namespace

TEST(Chromatic, SquaredCycles) {
  EXPECT_EQ(chromatic_number(squared_cycle(6)).chi, 3);
  EXPECT_EQ(chromatic_number(squared_cycle(7)).chi, 4);
  EXPECT_EQ(chromatic_number(squared_cycle(8)).chi, 4);
  EXPECT_EQ(chromatic_number(squared_cycle(5)).chi, 5);
}

TEST(Chromatic, CertificateIsProper) {
  const Graph g = squared_cycle(11);
  const auto r = chromatic_number(g);
  EXPECT_NO_THROW(r.certificate.validate(g));
  EXPECT_EQ(r.certificate.num_colors, r.chi);
  EXPECT_EQ(r.certificate.claim, ColoringClaim::equals_chi);
}

TEST(Chromatic, AgreesWithBruteForce) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = oracle::random_graph(n, 0.2 + 0.6 * (i % 5) / 5.0, rng);
    EXPECT_EQ(chromatic_number(g).chi, oracle::brute_chromatic_number(g));
  }
}

TEST(Chromatic, BudgetAndRange) {
  EXPECT_THROW(chromatic_number(complete_graph(65)), ParameterError);
  ChromaticOptions tiny;
  tiny.node_limit = 3;
  EXPECT_THROW(chromatic_number(squared_cycle(20), tiny), BudgetExceeded);
}

TEST(Residue, PathPartitions) {
  const auto p7 = residue_partition_path(7);
  ASSERT_EQ(p7.parts.size(), 3u);
  EXPECT_EQ(p7.parts[0], vs({1, 4, 7}));
  EXPECT_EQ(p7.parts[1], vs({2, 5}));
  EXPECT_EQ(p7.parts[2], vs({3, 6}));
  const auto p3 = residue_partition_path(3);
  for (const auto& part : p3.parts) EXPECT_EQ(part.size(), 1u);
  const auto p9 = residue_partition_path(9);
  for (const auto& part : p9.parts) EXPECT_EQ(part.size(), 3u);
}

TEST(ExplicitCycle, Constructions) {
  const auto p6 = explicit_cycle_partition(6);
  EXPECT_EQ(p6.parts.size(), 3u);

  const auto p7 = explicit_cycle_partition(7);
  ASSERT_EQ(p7.parts.size(), 4u);
  EXPECT_EQ(p7.parts[3], vs({7}));

  const auto p8 = explicit_cycle_partition(8);
  ASSERT_EQ(p8.parts.size(), 4u);
  auto sorted = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  EXPECT_EQ(sorted(p8.parts[0]), vs({3, 7}));
  EXPECT_EQ(sorted(p8.parts[1]), vs({1, 5}));
  EXPECT_EQ(sorted(p8.parts[2]), vs({2, 6}));
  EXPECT_EQ(sorted(p8.parts[3]), vs({4, 8}));

  for (int l = 6; l <= 40; ++l) EXPECT_NO_THROW(explicit_cycle_partition(l).validate(squared_cycle(l))) << l;
  EXPECT_THROW(explicit_cycle_partition(5), ParameterError);
}

TEST(CriticalDeletion, ThreeColorable) {
  for (int l = 7; l <= 20; ++l) {
    if (l % 3 == 0) continue;
    const auto d = critical_deletion(l);
    const Graph g = delete_edges(squared_cycle(l), d.removed);
    EXPECT_EQ(chromatic_number(g).chi, 3) << l;
    EXPECT_EQ(d.partition.parts.size(), 3u);
  }
  EXPECT_THROW(critical_deletion(9), ParameterError);
}

TEST(CriticalDeletion, VertexDeletedStaysFourChromatic) {
  for (int v = 0; v < 8; ++v) EXPECT_EQ(chromatic_number(delete_vertex(squared_cycle(8), v)).chi, 4);
  const std::vector<Edge> removed{{7, 0}, {2, 3}};
  EXPECT_EQ(chromatic_number(delete_edges(squared_cycle(8), removed)).chi, 3);
}

TEST(Uniqueness, ResidueIsOnlyGoodPartition) {
  EXPECT_TRUE(good_partition_uniqueness_check(4).unique);
  const auto r7 = good_partition_uniqueness_check(7);
  EXPECT_TRUE(r7.unique);
  EXPECT_EQ(r7.colorings, 6);  // the 3! relabelings
  EXPECT_TRUE(good_partition_uniqueness_check(12).unique);
  EXPECT_THROW(good_partition_uniqueness_check(3), ParameterError);
  EXPECT_THROW(good_partition_uniqueness_check(21), ParameterError);
}

TEST(GoodPartition, CanonicalAndValidate) {
  GoodPartition p{{{5, 2}, {}, {0, 3}, {1, 4}}};
  const auto c = p.canonical();
  ASSERT_EQ(c.parts.size(), 3u);
  EXPECT_EQ(c.parts[0], (std::vector<int>{0, 3}));
  EXPECT_EQ(c.parts[2], (std::vector<int>{2, 5}));
  GoodPartition bad{{{0, 1}, {2}}};
  EXPECT_THROW(bad.validate(complete_graph(3)), InternalCheckError);
}
