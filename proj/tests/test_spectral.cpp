#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sqturan/error.hpp"
#include "sqturan/spectral.hpp"

using namespace sqturan;

TEST(Spectral, SmallExamples) {
  EXPECT_NEAR(spectral_radius(complete_graph(4)).rho, 3.0, 1e-10);
  EXPECT_NEAR(spectral_radius(squared_cycle(5)).rho, 4.0, 1e-10);
  EXPECT_GE(spectral_radius(gn_graph(12)).rho, 8.0);
  const std::vector<int> star{1, 4};
  EXPECT_NEAR(spectral_radius(complete_multipartite(star)).rho, 2.0, 1e-9);
}

TEST(Spectral, BipartiteConverges) {
  const auto r = spectral_radius(cycle_graph(10));
  EXPECT_NEAR(r.rho, 2.0, 1e-9);
  EXPECT_LE(r.residual, 1e-10);
}

TEST(Spectral, ResultInvariants) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 30; ++i) {
    const Graph g = oracle::random_connected_graph(20, 0.2, rng);
    const auto r = spectral_radius(g);
    EXPECT_LE(r.residual, 1e-10);
    EXPECT_NEAR(eigen_residual(g, r.vector, r.rho), r.residual, 1e-12);
    double sq = 0.0;
    for (double x : r.vector) {
      EXPECT_GT(x, 0.0);
      sq += x * x;
    }
    EXPECT_NEAR(sq, 1.0, 1e-12);
    EXPECT_FALSE(r.disconnected);
  }
}

TEST(Spectral, Disconnected) {
  const Graph g = join(complete_graph(1), complete_graph(1));  // K2
  GraphBuilder b(7);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) b.add_edge(u, v);
  b.add_edge(4, 5);
  const auto r = spectral_radius(b.build());
  EXPECT_TRUE(r.disconnected);
  EXPECT_NEAR(r.rho, 3.0, 1e-10);
  EXPECT_EQ(r.vector[5], 0.0);
  EXPECT_EQ(r.vector[6], 0.0);
  EXPECT_NEAR(spectral_radius(g).rho, 1.0, 1e-10);
  EXPECT_EQ(spectral_radius(Graph::edgeless(3)).rho, 0.0);
}

TEST(Spectral, AgreesWithJacobi) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + static_cast<int>(rng() % 63);
    const Graph g = oracle::random_connected_graph(n, 0.05 + 0.9 * (i % 9) / 9.0, rng);
    EXPECT_NEAR(spectral_radius(g).rho, oracle::jacobi_spectral_radius(g), 1e-8) << i;
  }
}

TEST(Spectral, AddingAnEdgeIncreasesRho) {
  std::mt19937_64 rng(47);
  int checked = 0;
  while (checked < 100) {
    const Graph g = oracle::random_connected_graph(16, 0.2, rng);
    const int u = static_cast<int>(rng() % 16), v = static_cast<int>(rng() % 16);
    if (u == v || g.adjacent(u, v)) continue;
    const Graph h = GraphBuilder(g).add_edge(u, v).build();
    EXPECT_GT(spectral_radius(h).rho, spectral_radius(g).rho + 1e-9);
    ++checked;
  }
}

TEST(Spectral, Sandwich) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 50; ++i) {
    const Graph g = oracle::random_connected_graph(25, 0.3, rng);
    const double rho = spectral_radius(g).rho;
    EXPECT_LE(rayleigh_lower_bound(g), rho + 1e-10);
    EXPECT_LE(rho, g.max_degree() + 1e-10);
  }
}

TEST(Rayleigh, Examples) {
  EXPECT_DOUBLE_EQ(rayleigh_lower_bound(complete_graph(4)), 3.0);
  EXPECT_DOUBLE_EQ(rayleigh_lower_bound(gn_graph(10)), 7.2);
  const std::vector<int> star{1, 4};
  EXPECT_DOUBLE_EQ(rayleigh_lower_bound(complete_multipartite(star)), 1.6);
}

TEST(Profile, Floor) {
  const auto r = spectral_radius(gn_graph(40));
  const auto p = eigenvector_profile(r);
  EXPECT_EQ(p.max_entry_vertex, 0);
  EXPECT_GT(p.ratio_floor, 0.6);
  EXPECT_LE(p.ratio_floor, 1.0);
  EXPECT_NEAR(eigenvector_profile(spectral_radius(turan_graph(39, 3))).ratio_floor, 1.0, 1e-9);
}

TEST(Balance, Examples) {
  const auto sym = eigenvector_balance_check(3, 3, 3);
  EXPECT_TRUE(sym.ok());
  EXPECT_NEAR(sym.part_value[0], sym.part_value[2], 1e-10);
  EXPECT_FALSE(sym.sign_value.has_value());

  const auto b = eigenvector_balance_check(4, 3, 3);
  EXPECT_TRUE(b.ok());
  EXPECT_LT(b.part_value[0], b.part_value[2]);

  const auto c = eigenvector_balance_check(5, 3, 3);
  ASSERT_TRUE(c.sign_value.has_value());
  EXPECT_GT(*c.sign_value, 0.0);
  EXPECT_TRUE(c.ok());

  EXPECT_THROW(eigenvector_balance_check(0, 3, 3), ParameterError);
}

TEST(Balance, MatchesJacobiRho) {
  const std::array<int, 3> parts{4, 3, 3};
  const Graph g = join(complete_graph(1), complete_multipartite(parts));
  EXPECT_NEAR(eigenvector_balance_check(4, 3, 3).rho, oracle::jacobi_spectral_radius(g), 1e-9);
}

TEST(Comparisons, Examples) {
  const auto c12 = spectral_comparisons(12);
  EXPECT_TRUE(c12.turan3_below_gn);
  EXPECT_TRUE(c12.rayleigh_holds);
  const auto c9 = spectral_comparisons(9);
  EXPECT_TRUE(c9.turan2_below_turan3);
  const auto c6 = spectral_comparisons(6);
  EXPECT_TRUE(c6.rayleigh_holds);
  EXPECT_THROW(spectral_comparisons(5), ParameterError);
}

TEST(Comparisons, LowerBoundRange) {
  for (int n = 30; n <= 120; n += 7) EXPECT_TRUE(spectral_comparisons(n).lower_bound_holds) << n;
}
