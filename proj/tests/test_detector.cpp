#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sqturan/coloring.hpp"
#include "sqturan/detector.hpp"
#include "sqturan/error.hpp"

using namespace sqturan;

namespace {

void expect_valid(const Graph& g, const DetectResult& r) {
  ASSERT_TRUE(r.embedding.has_value());
  EXPECT_TRUE(verify_embedding(g, *r.embedding).ok);
}

}  // namespace

TEST(Detect, CompleteHost) {
  const Graph k8 = complete_graph(8);
  expect_valid(k8, find_squared_cycle(k8, 8));
  EXPECT_FALSE(find_squared_cycle(complete_graph(7), 8).embedding);
}

TEST(Detect, ApexTuranIsFree) {
  EXPECT_FALSE(find_squared_cycle(gn_graph(20), 8).embedding);
  EXPECT_FALSE(find_squared_cycle(gn_graph(30), 11).embedding);
}

TEST(Detect, FourPartiteHost) {
  const std::vector<int> parts{2, 2, 2, 2};
  const Graph g = complete_multipartite(parts);
  expect_valid(g, find_squared_cycle(g, 8));
}

TEST(Detect, SelfContainment) {
  for (int l = 3; l <= 20; ++l) {
    const Graph g = squared_cycle(l);
    expect_valid(g, find_squared_cycle(g, l));
  }
}

TEST(Detect, ChromaticObstruction) {
  for (int n = 8; n <= 24; ++n)
    for (int l : {7, 8, 10, 11}) EXPECT_FALSE(find_squared_cycle(turan_graph(n, 3), l).embedding) << n << " " << l;
  // 3 | ell: the 3-partite host does contain it once parts are big enough.
  const Graph t = turan_graph(9, 3);
  expect_valid(t, find_squared_cycle(t, 9));
}

TEST(Detect, ThroughVertexAndEdge) {
  const Graph g = gn_graph(12);
  EXPECT_FALSE(find_squared_cycle_through_vertex(g, 8, 0).embedding);
  // K_{2,2,2,2} inside: every vertex and edge lies on a copy.
  const std::vector<int> parts{2, 2, 2, 2};
  const Graph h = complete_multipartite(parts);
  for (int v = 0; v < 8; ++v) {
    const auto r = find_squared_cycle_through_vertex(h, 8, v);
    expect_valid(h, r);
    EXPECT_NE(std::find(r.embedding->ordering.begin(), r.embedding->ordering.end(), v), r.embedding->ordering.end());
  }
  for (auto [u, v] : h.edges()) {
    const auto r = find_squared_cycle_through_edge(h, 8, u, v);
    expect_valid(h, r);
    const auto& o = r.embedding->ordering;
    const auto iu = std::find(o.begin(), o.end(), u) - o.begin();
    const auto iv = std::find(o.begin(), o.end(), v) - o.begin();
    const auto d = std::abs(iu - iv);
    EXPECT_TRUE(d == 1 || d == 2 || d == 6 || d == 7);
  }
  EXPECT_THROW(find_squared_cycle_through_edge(h, 8, 0, 1), ParameterError);
}

TEST(Detect, BudgetAndParameters) {
  EXPECT_THROW(find_squared_cycle(complete_graph(5), 2), ParameterError);
  DetectorOptions tiny;
  tiny.node_limit = 5;
  tiny.lookahead_min_pool = 1000;
  EXPECT_THROW(find_squared_cycle(turan_graph(24, 3), 8, tiny), BudgetExceeded);
}

TEST(Detect, AgreesWithGenericOracle) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const int n = 6 + static_cast<int>(rng() % 6);
    const Graph g = oracle::random_graph(n, 0.55 + 0.4 * (i % 4) / 4.0, rng);
    for (int l : {6, 7, 8}) {
      if (l > n) continue;
      const auto r = find_squared_cycle(g, l);
      EXPECT_EQ(r.embedding.has_value(), generic_subgraph_oracle(g, squared_cycle(l))) << i << " " << l;
      if (r.embedding) EXPECT_TRUE(verify_embedding(g, *r.embedding).ok);
    }
  }
}

TEST(Detect, ThreadsGiveSameAnswer) {
  std::mt19937_64 rng(29);
  DetectorOptions par;
  par.threads = 3;
  for (int i = 0; i < 30; ++i) {
    const Graph g = oracle::random_graph(11, 0.8, rng);
    const auto a = find_squared_cycle(g, 8);
    const auto b = find_squared_cycle(g, 8, par);
    ASSERT_EQ(a.embedding.has_value(), b.embedding.has_value());
    if (a.embedding) EXPECT_EQ(a.embedding->ordering, b.embedding->ordering);
  }
}

TEST(Detect, LookaheadDoesNotChangeAnswers) {
  std::mt19937_64 rng(31);
  DetectorOptions always, never;
  always.lookahead_min_pool = 0;
  never.lookahead_min_pool = 1000;
  for (int i = 0; i < 100; ++i) {
    const Graph g = oracle::random_graph(12, 0.7, rng);
    for (int l : {6, 7, 8})
      EXPECT_EQ(find_squared_cycle(g, l, always).embedding.has_value(),
                find_squared_cycle(g, l, never).embedding.has_value());
  }
}

TEST(Detect, Monotone) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 50; ++i) {
    const Graph g = oracle::random_graph(12, 0.75, rng);
    const auto r = find_squared_cycle(g, 8);
    if (!r.embedding) continue;
    GraphBuilder b(g);
    for (int k = 0; k < 5; ++k) {
      const int u = static_cast<int>(rng() % 12);
      const int v = (u + 1 + static_cast<int>(rng() % 11)) % 12;
      b.add_edge(u, v);
    }
    const Graph bigger = b.build();
    EXPECT_TRUE(verify_embedding(bigger, *r.embedding).ok);
  }
}

TEST(Verify, Embeddings) {
  const Graph c8 = squared_cycle(8);
  SquaredCycleEmbedding id{8, {0, 1, 2, 3, 4, 5, 6, 7}};
  EXPECT_TRUE(verify_embedding(c8, id).ok);
  SquaredCycleEmbedding swapped{8, {1, 0, 2, 3, 4, 5, 6, 7}};
  EXPECT_TRUE(verify_embedding(complete_graph(8), swapped).ok);
  const auto check = verify_embedding(c8, swapped);
  EXPECT_FALSE(check.ok);
  ASSERT_TRUE(check.missing.has_value());
  SquaredCycleEmbedding repeated{8, {0, 0, 2, 3, 4, 5, 6, 7}};
  EXPECT_THROW(verify_embedding(c8, repeated), ParameterError);
  SquaredCycleEmbedding short_one{8, {0, 1, 2}};
  EXPECT_THROW(verify_embedding(c8, short_one), ParameterError);
}

TEST(Oracle, Examples) {
  EXPECT_TRUE(generic_subgraph_oracle(squared_cycle(9), squared_cycle(9)));
  EXPECT_FALSE(generic_subgraph_oracle(turan_graph(12, 3), squared_cycle(8)));
  EXPECT_FALSE(generic_subgraph_oracle(complete_graph(7), squared_cycle(8)));
  EXPECT_THROW(generic_subgraph_oracle(complete_graph(17), squared_cycle(8)), ParameterError);
}

TEST(Witness, AllSituationsEmbed) {
  const WitnessCycle kinds[] = {WitnessCycle::TwoEdgesOnePart,       WitnessCycle::TwoHeavySamePart,
                                WitnessCycle::HeavyPairCommonMiddle, WitnessCycle::HeavyPairSparseMiddle,
                                WitnessCycle::HeavyPlusEdgeSamePart, WitnessCycle::EdgesInTwoParts};
  for (auto kind : kinds) {
    for (int k = 2; k <= 6; ++k) {
      const auto names = witness_cycle(kind, k);
      EXPECT_EQ(static_cast<int>(names.size()), 3 * k + 2);
      const NamedGraph host = witness_host(kind, k);
      const auto e = embedding_from_names(host, names);
      EXPECT_TRUE(verify_embedding(host.graph, e).ok) << static_cast<int>(kind) << " k=" << k;
    }
  }
  EXPECT_THROW(witness_cycle(WitnessCycle::TwoEdgesOnePart, 1), ParameterError);
}

TEST(Witness, WithoutInternalEdgesTheHostIsThreePartite) {
  // Dropping the assumed internal edges leaves a 3-partite host, which
  // cannot contain C_{3k+2}^2.
  const NamedGraph host = witness_host(WitnessCycle::TwoEdgesOnePart, 2);
  GraphBuilder b(host.graph.order());
  for (auto [u, v] : host.graph.edges())
    if (witness_part(host.names[u]) != witness_part(host.names[v])) b.add_edge(u, v);
  EXPECT_FALSE(find_squared_cycle(b.build(), 8).embedding);
}

TEST(Witness, FigureHosts) {
  for (int f = 1; f <= 3; ++f) {
    const NamedGraph h = figure_host(f);
    EXPECT_EQ(h.graph.edge_count(), 16);
    EXPECT_EQ(h.graph, squared_cycle(8));
    const auto e = embedding_from_names(h, h.names);
    EXPECT_TRUE(verify_embedding(h.graph, e).ok);
  }
  // The drawn labels match the first eight names of the corresponding cycles.
  const auto c1 = witness_cycle(WitnessCycle::TwoEdgesOnePart, 2);
  EXPECT_EQ(figure_host(1).names, std::vector<std::string>(c1.begin(), c1.begin() + 8));
  const auto c2 = witness_cycle(WitnessCycle::HeavyPairCommonMiddle, 2);
  EXPECT_EQ(figure_host(2).names, std::vector<std::string>(c2.begin(), c2.begin() + 8));
  const auto c3 = witness_cycle(WitnessCycle::HeavyPairSparseMiddle, 2);
  EXPECT_EQ(figure_host(3).names, std::vector<std::string>(c3.begin(), c3.begin() + 8));
  EXPECT_THROW(figure_host(4), ParameterError);
}
