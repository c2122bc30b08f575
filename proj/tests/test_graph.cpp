#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "sqturan/error.hpp"
#include "sqturan/graph.hpp"
#include "sqturan/graph_io.hpp"

using namespace sqturan;

TEST(VertexSet, BasicOps) {
  VertexSet s;
  EXPECT_TRUE(s.empty());
  s.set(3);
  s.set(130);
  s.set(511);
  EXPECT_EQ(s.count(), 3);
  EXPECT_EQ(s.first(), 3);
  EXPECT_EQ(s.next(3), 130);
  EXPECT_EQ(s.next(130), 511);
  EXPECT_EQ(s.next(511), -1);
  VertexSet t = VertexSet::prefix(131);
  EXPECT_EQ(t.count(), 131);
  EXPECT_EQ((s & t).count(), 2);
  EXPECT_EQ((s - t).count(), 1);
  EXPECT_EQ(s.intersection_count(t), 2);
}

TEST(Build, PowerOfCycle) {
  EXPECT_EQ(graph_power(cycle_graph(5), 2), complete_graph(5));
  EXPECT_EQ(graph_power(cycle_graph(6), 1), cycle_graph(6));
  const Graph c62 = squared_cycle(6);
  EXPECT_EQ(c62.edge_count(), 12);
  for (int v = 0; v < 6; ++v) {
    EXPECT_EQ(c62.degree(v), 4);
    EXPECT_FALSE(c62.adjacent(v, (v + 3) % 6));
  }
}

TEST(Build, FamilySpecs) {
  EXPECT_EQ(build(*GraphFamily::power(GraphFamily::cycle(8), 2)), squared_cycle(8));
  EXPECT_EQ(build(*GraphFamily::gn(10)), gn_graph(10));
  EXPECT_EQ(build(*GraphFamily::join(GraphFamily::multipartite({1}), GraphFamily::turan(9, 3))), gn_graph(10));
  EXPECT_THROW(build(*GraphFamily::cycle(2)), ParameterError);
  EXPECT_THROW(build(*GraphFamily::turan(2, 3)), ParameterError);
  EXPECT_THROW(build(*GraphFamily::power(GraphFamily::cycle(5), 0)), ParameterError);
}

TEST(Build, TuranLabeling) {
  const Graph t = turan_graph(10, 3);
  // parts {0..3}, {4..6}, {7..9}
  EXPECT_FALSE(t.adjacent(0, 3));
  EXPECT_TRUE(t.adjacent(3, 4));
  EXPECT_FALSE(t.adjacent(4, 6));
  EXPECT_TRUE(t.adjacent(6, 7));
  EXPECT_EQ(turan_part_sizes(10, 3), (std::vector<int>{4, 3, 3}));
}

TEST(EdgeCount, ClosedForms) {
  EXPECT_EQ(turan_graph(9, 3).edge_count(), 27);
  EXPECT_EQ(gn_graph(10).edge_count(), 36);
  EXPECT_EQ(gn_graph(40).edge_count(), 546);
  EXPECT_EQ(gn_graph(20).edge_count(), 139);
  EXPECT_EQ(turan_graph(20, 3).edge_count(), 133);
  EXPECT_EQ(complete_graph(1).edge_count(), 0);
  for (int r = 3; r <= 5; ++r)
    for (int n = r; n <= 64; ++n) EXPECT_EQ(turan_graph(n, r).edge_count(), turan_edge_count(n, r));
  for (int n = 4; n <= 64; ++n) EXPECT_EQ(gn_graph(n).edge_count(), gn_edge_count(n));
}

TEST(Build, PathSquareInsideCycleSquare) {
  for (int l = 3; l <= 64; ++l) {
    const Graph p = squared_path(l);
    const Graph c = squared_cycle(l);
    for (auto [u, v] : p.edges()) EXPECT_TRUE(c.adjacent(u, v)) << l;
  }
}

TEST(Matching, SmallCases) {
  EXPECT_EQ(max_matching(squared_cycle(8)).size(), 4);
  EXPECT_EQ(max_matching(Graph::edgeless(5)).size(), 0);
  EXPECT_EQ(max_matching(complete_graph(4)).size(), 2);
  EXPECT_EQ(max_matching(cycle_graph(9)).size(), 4);
}

TEST(Matching, AgreesWithBruteForce) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Graph g = oracle::random_graph(n, 0.1 + 0.8 * (i % 10) / 10.0, rng);
    const Matching m = max_matching(g);
    EXPECT_EQ(m.size(), oracle::brute_matching_number(g));
    VertexSet used;
    for (auto [u, v] : m.edges) {
      EXPECT_TRUE(g.adjacent(u, v));
      EXPECT_FALSE(used.test(u) || used.test(v));
      used.set(u);
      used.set(v);
    }
  }
}

TEST(Matching, BlossomOnLargerGraphs) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const Graph g = oracle::random_graph(14, 0.2, rng);
    EXPECT_EQ(max_matching(g).size(), oracle::brute_matching_number(g));
  }
}

TEST(Derived, InducedSubgraph) {
  EXPECT_EQ(induced_subgraph(complete_graph(5), std::vector<int>{0, 1, 2}), complete_graph(3));
  EXPECT_EQ(induced_subgraph(squared_cycle(8), std::vector<int>{0, 1, 2}), complete_graph(3));
  EXPECT_EQ(induced_subgraph(squared_cycle(8), std::vector<int>{0, 1, 2, 3}).edge_count(), 5);
  EXPECT_EQ(induced_subgraph(complete_graph(5), std::vector<int>{4}).order(), 1);
  EXPECT_THROW(induced_subgraph(complete_graph(5), std::vector<int>{}), ParameterError);
  EXPECT_THROW(induced_subgraph(complete_graph(5), std::vector<int>{7}), ParameterError);
}

TEST(Derived, DeleteEdgesAndVertex) {
  const std::vector<Edge> one{{0, 2}};
  EXPECT_EQ(delete_edges(complete_graph(3), one), path_graph(3));
  const std::vector<Edge> missing{{0, 4}};
  EXPECT_THROW(delete_edges(squared_cycle(8), missing), ParameterError);
  const Graph g = delete_vertex(squared_cycle(8), 7);
  EXPECT_EQ(g.order(), 7);
  EXPECT_EQ(g.edge_count(), 12);
}

TEST(Derived, DeleteThenAddRestores) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const Graph g = oracle::random_graph(12, 0.5, rng);
    const auto edges = g.edges();
    if (edges.empty()) continue;
    const std::vector<Edge> e{edges[rng() % edges.size()]};
    EXPECT_EQ(add_edges(delete_edges(g, e), e), g);
  }
}

TEST(Graph6, KnownStrings) {
  EXPECT_EQ(to_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(to_graph6(Graph::edgeless(1)), "@");
  EXPECT_EQ(to_graph6(path_graph(3)), "Bg");
  EXPECT_EQ(from_graph6(">>graph6<<C~"), complete_graph(4));
}

TEST(Graph6, RoundTrip) {
  std::mt19937_64 rng(5);
  for (int n : {1, 2, 5, 6, 7, 13, 62, 63, 64, 100, 200}) {
    const Graph g = oracle::random_graph(n, 0.3, rng);
    EXPECT_EQ(from_graph6(to_graph6(g)), g) << n;
  }
}

TEST(Graph6, RejectsMalformed) {
  EXPECT_THROW(from_graph6(""), IoError);
  EXPECT_THROW(from_graph6("C"), IoError);
  EXPECT_THROW(from_graph6("C~~"), IoError);
  EXPECT_THROW(from_graph6("B\x7f"), IoError);
  EXPECT_THROW(from_graph6("Ao"), IoError);  // padding bit set
}

TEST(Dimacs, RoundTrip) {
  const Graph g = squared_cycle(9);
  std::stringstream ss;
  write_dimacs(ss, g);
  EXPECT_EQ(read_dimacs(ss), g);
  std::stringstream bad("p edge 3 1\ne 1 4\n");
  EXPECT_THROW(read_dimacs(bad), IoError);
  std::stringstream comments("c hello\np edge 3 2\ne 1 2\ne 2 3\n");
  EXPECT_EQ(read_dimacs(comments), path_graph(3));
}

TEST(Components, Basic) {
  const Graph g = join(complete_graph(2), complete_graph(2));
  EXPECT_TRUE(is_connected(g));
  EXPECT_EQ(connected_components(Graph::edgeless(4)).size(), 4u);
}
