#include <chromprof/coloring.hpp>
#include <chromprof/constructions.hpp>

#include <gtest/gtest.h>

#include <bit>
#include <random>

using namespace chromprof;

namespace {

auto random_graph(int n, double p, std::mt19937 &rng) -> Graph {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng))
        g.add_edge(i, j);
  return g;
}

// Oracle: every assignment of k colours.
auto brute_colorable(const Graph &g, int k) -> bool {
  const int n = g.vertex_count();
  if (n == 0)
    return true;
  if (k == 0)
    return false;
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  const auto edges = g.edges();
  while (true) {
    bool ok = true;
    for (auto [u, v] : edges)
      ok = ok && c[static_cast<std::size_t>(u)] != c[static_cast<std::size_t>(v)];
    if (ok)
      return true;
    int i = 0;
    while (i < n && ++c[static_cast<std::size_t>(i)] == k)
      c[static_cast<std::size_t>(i++)] = 0;
    if (i == n)
      return false;
  }
}

auto brute_chi(const Graph &g) -> int {
  int k = 0;
  while (!brute_colorable(g, k))
    ++k;
  return k;
}

auto brute_alpha(const Graph &g) -> int {
  const int n = g.vertex_count();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (auto [u, v] : g.edges())
      ok = ok && !((mask >> u & 1u) && (mask >> v & 1u));
    if (ok)
      best = std::max(best, std::popcount(mask));
  }
  return best;
}

} // namespace

TEST(Coloring, ChromaticNumberMatchesEnumeration) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 250; ++trial) {
    const Graph g = random_graph(3 + trial % 6, 0.2 + 0.1 * (trial % 7), rng);
    const auto res = chromatic_number(g);
    ASSERT_EQ(res.chi, brute_chi(g));
    EXPECT_TRUE(is_proper_coloring(g, res.witness));
    EXPECT_EQ(res.witness.k, res.chi);
  }
}

TEST(Coloring, DecisionAgreesWithEnumeration) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(7, 0.5, rng);
    for (int k = 0; k <= 4; ++k) {
      const auto c = is_k_colorable(g, k);
      ASSERT_EQ(c.has_value(), brute_colorable(g, k));
      if (c)
        EXPECT_TRUE(is_proper_coloring(g, *c));
    }
  }
}

TEST(Coloring, EdgeCases) {
  EXPECT_TRUE(is_k_colorable(Graph(0), 0));
  EXPECT_FALSE(is_k_colorable(Graph(1), 0));
  EXPECT_THROW(is_k_colorable(Graph(2), -1), ParameterError);
  EXPECT_EQ(chromatic_number(Graph(0)).chi, 0);
  EXPECT_EQ(chromatic_number(complete_graph(6)).chi, 6);
  EXPECT_EQ(chromatic_number(cycle_graph(7)).chi, 3);
  EXPECT_EQ(chromatic_number(cycle_graph(8)).chi, 2);
}

TEST(Coloring, DigraphUsesUnderlyingGraph) {
  // Antiparallel arcs count as one edge.
  const Digraph d = make_digraph(2, {{0, 1}, {1, 0}});
  EXPECT_EQ(chromatic_number(d).chi, 2);
  EXPECT_EQ(chromatic_number(directed_cycle(5)).chi, 3);
}

TEST(Coloring, LargerStructuredGraphs) {
  // C5 blowups are 3-chromatic, the join with K_m adds m.
  const std::vector<int> sizes(5, 6);
  const Graph c5 = blowup(cycle_graph(5), sizes);
  EXPECT_EQ(chromatic_number(c5).chi, 3);
  const std::vector<int> ks{4, 4};
  EXPECT_EQ(chromatic_number(join(c5, blowup(complete_graph(2), ks))).chi, 5);
}

TEST(Independence, MatchesSubsetEnumeration) {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(4 + trial % 9, 0.4, rng);
    const auto res = independence_number(g);
    ASSERT_EQ(res.alpha, brute_alpha(g));
    EXPECT_EQ(static_cast<int>(res.vertices.size()), res.alpha);
    EXPECT_TRUE(is_independent_set(g, res.vertices));
  }
  EXPECT_EQ(independence_number(Graph(0)).alpha, 0);
}

TEST(Bipartite, SidesOrOddCycle) {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(3 + trial % 9, 0.25, rng);
    const auto res = is_bipartite(g);
    ASSERT_EQ(res.bipartite, brute_colorable(g, 2));
    if (res.bipartite) {
      EXPECT_TRUE(is_proper_coloring(g, Coloring{2, res.sides}));
    } else {
      EXPECT_TRUE(is_odd_cycle(g, res.odd_cycle));
    }
  }
}
