#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "sqturan/canonical.hpp"
#include "sqturan/error.hpp"
#include "sqturan/graph_io.hpp"

using namespace sqturan;

namespace {

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(g.order()));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return relabel(g, p);
}

}  // namespace

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937_64 rng(73);
  const std::string c5 = canonical_form(cycle_graph(5));
  for (int i = 0; i < 20; ++i) EXPECT_EQ(canonical_form(shuffled(cycle_graph(5), rng)), c5);
  for (int i = 0; i < 50; ++i) {
    const Graph g = oracle::random_graph(10, 0.4, rng);
    EXPECT_EQ(canonical_form(shuffled(g, rng)), canonical_form(g));
  }
}

TEST(Canonical, DistinguishesNonIsomorphic) {
  GraphBuilder a(4), b(4);
  a.add_edge(0, 1).add_edge(1, 2).add_edge(0, 2);
  b.add_edge(0, 1).add_edge(1, 2);
  EXPECT_NE(canonical_form(a.build()), canonical_form(b.build()));
}

TEST(Canonical, LabelingReproducesForm) {
  const Graph g = squared_cycle(9);
  const auto lab = canonical_labeling(g);
  EXPECT_EQ(to_graph6(relabel(g, lab.position)), lab.form);
}

TEST(Canonical, ElevenGraphsOnFourVertices) {
  std::set<std::string> forms;
  for (int mask = 0; mask < 64; ++mask) {
    GraphBuilder b(4);
    int bit = 0;
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v, ++bit)
        if (mask >> bit & 1) b.add_edge(u, v);
    forms.insert(canonical_form(b.build()));
  }
  EXPECT_EQ(forms.size(), 11u);
}

TEST(Canonical, AgreesWithBruteForceOnIsomorphism) {
  std::mt19937_64 rng(79);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = oracle::random_graph(n, 0.5, rng);
    const Graph h = oracle::random_graph(n, 0.5, rng);
    EXPECT_EQ(canonical_form(g) == canonical_form(h), oracle::brute_canonical_form(g) == oracle::brute_canonical_form(h));
  }
}

TEST(Canonical, VertexOrbits) {
  const Graph c8 = squared_cycle(8);
  const auto f0 = canonical_labeling(c8, 0).form;
  for (int v = 1; v < 8; ++v) EXPECT_EQ(canonical_labeling(c8, v).form, f0);
  const Graph g = gn_graph(10);
  EXPECT_NE(canonical_labeling(g, 0).form, canonical_labeling(g, 1).form);
  EXPECT_EQ(canonical_labeling(g, 1).form, canonical_labeling(g, 9).form);
}

TEST(Canonical, Limits) {
  EXPECT_THROW(canonical_form(complete_graph(13)), ParameterError);
  CanonOptions big;
  big.max_order = 16;
  EXPECT_NO_THROW(canonical_form(complete_graph(16), big));
}
