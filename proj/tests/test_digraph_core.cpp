#include <chromprof/digraph.hpp>
#include <chromprof/io.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace chromprof;

namespace {

auto random_digraph(int n, double p, std::mt19937 &rng) -> Digraph {
  std::bernoulli_distribution coin(p);
  Digraph d(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && coin(rng))
        d.add_arc(i, j);
  return d;
}

// Oracle: isomorphism by trying every permutation.
auto brute_isomorphic(const Digraph &a, const Digraph &b) -> bool {
  if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count())
    return false;
  std::vector<int> p(static_cast<std::size_t>(a.vertex_count()));
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : a.arcs())
      ok = ok && b.has_arc(p[static_cast<std::size_t>(u)], p[static_cast<std::size_t>(v)]);
    if (ok)
      return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

} // namespace

TEST(VertexSet, SmallAndLargeUniverses) {
  for (int n : {5, 64, 65, 200}) {
    VertexSet s(n);
    EXPECT_TRUE(s.empty());
    EXPECT_EQ(s.first(), -1);
    s.insert(n - 1);
    s.insert(0);
    EXPECT_EQ(s.size(), 2);
    EXPECT_TRUE(s.contains(n - 1));
    EXPECT_EQ(s.first(), 0);
    const VertexSet c = s.complement();
    EXPECT_EQ(c.size(), n - 2);
    EXPECT_EQ((s & c).size(), 0);
    EXPECT_EQ((s | c).size(), n);
    EXPECT_EQ(VertexSet::full(n) - c, s);
    EXPECT_EQ(s.to_vector(), (std::vector<int>{0, n - 1}));
  }
}

TEST(Digraph, ArcsAndDegrees) {
  Digraph d(3);
  d.add_arc(0, 1);
  d.add_arc(1, 0);
  d.add_arc(1, 2);
  EXPECT_EQ(d.arc_count(), 3);
  EXPECT_EQ(d.out_degree(1), 2);
  EXPECT_EQ(d.in_degree(0), 1);
  EXPECT_TRUE(d.adjacent(2, 1));
  EXPECT_FALSE(d.adjacent(0, 2));
  EXPECT_EQ(min_out_degree(d), 0);
  EXPECT_TRUE(d.mirror_consistent());
  EXPECT_EQ(d.arcs(), (std::vector<Arc>{{0, 1}, {1, 0}, {1, 2}}));
}

TEST(Digraph, Errors) {
  Digraph d(3);
  EXPECT_THROW(d.add_arc(1, 1), LoopError);
  EXPECT_THROW(d.add_arc(0, 3), RangeError);
  EXPECT_THROW(min_out_degree(Digraph(0)), EmptyError);
}

TEST(Digraph, MirrorConsistencyUnderRandomEdits) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Digraph d = random_digraph(9, 0.4, rng);
    std::uniform_int_distribution<int> v(0, 8);
    for (int i = 0; i < 30; ++i) {
      const int a = v(rng), b = v(rng);
      if (a == b)
        continue;
      if (d.has_arc(a, b))
        d.remove_arc(a, b);
      else
        d.add_arc(a, b);
    }
    ASSERT_TRUE(d.mirror_consistent());
    int out_sum = 0, in_sum = 0;
    for (int x = 0; x < 9; ++x) {
      out_sum += d.out_degree(x);
      in_sum += d.in_degree(x);
    }
    EXPECT_EQ(out_sum, d.arc_count());
    EXPECT_EQ(in_sum, d.arc_count());
  }
}

TEST(Operations, UnderlyingAndDoubleOrientation) {
  const Digraph d = make_digraph(3, {{0, 1}, {1, 0}, {1, 2}});
  const Graph g = underlying_graph(d);
  EXPECT_EQ(g.edge_count(), 2);
  const Digraph dd = double_orientation(g);
  EXPECT_EQ(dd.arc_count(), 4);
  EXPECT_EQ(underlying_graph(dd), g);
}

TEST(Operations, BlowupClassesAndDeletion) {
  const std::vector<int> sizes{2, 3, 1, 2, 2};
  const Graph b = blowup(cycle_graph(5), sizes);
  EXPECT_EQ(b.vertex_count(), 10);
  // Each class is independent and joined completely to both cyclic neighbours.
  EXPECT_EQ(b.edge_count(), 2 * 3 + 3 * 1 + 1 * 2 + 2 * 2 + 2 * 2);
  EXPECT_FALSE(b.adjacent(0, 1));
  const std::vector<int> drop{1, 0, 1};
  EXPECT_EQ(blowup(path_graph(3), drop).edge_count(), 0);
}

TEST(Operations, JoinAndMultipartite) {
  const Graph j = join(cycle_graph(5), complete_graph(2));
  EXPECT_EQ(j.vertex_count(), 7);
  EXPECT_EQ(j.edge_count(), 5 + 1 + 10);
  const std::vector<int> parts{1, 2, 3};
  EXPECT_EQ(complete_multipartite_graph(parts).edge_count(), 2 + 3 + 6);
}

TEST(Operations, InducedSubdigraphAndReverse) {
  const Digraph d = make_digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const std::vector<int> keep{1, 2, 3};
  const auto sub = induced_subdigraph(d, keep);
  EXPECT_EQ(sub.digraph.arc_count(), 2);
  EXPECT_EQ(sub.to_host, keep);
  const std::vector<int> bad{0, 7};
  EXPECT_THROW(induced_subdigraph(d, bad), RangeError);
  EXPECT_TRUE(reverse(d).has_arc(1, 0));
}

TEST(Canonical, AgreesWithPermutationOracle) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 5;
    const Digraph a = random_digraph(n, 0.35, rng);
    Digraph b = random_digraph(n, 0.35, rng);
    if (trial % 3 == 0) {
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      b = relabel(a, perm);
    }
    const bool oracle = brute_isomorphic(a, b);
    EXPECT_EQ(canonical_form(a) == canonical_form(b), oracle);
    EXPECT_EQ(is_isomorphic(a, b), oracle);
  }
}

TEST(Canonical, LargeOrdersUseExactSearch) {
  std::mt19937 rng(5);
  const Digraph a = random_digraph(12, 0.3, rng);
  std::vector<int> perm(12);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  EXPECT_TRUE(is_isomorphic(a, relabel(a, perm)));
  Digraph b = relabel(a, perm);
  const auto arcs = b.arcs();
  b.remove_arc(arcs[0].first, arcs[0].second);
  EXPECT_FALSE(is_isomorphic(a, b));
  EXPECT_THROW(canonical_form(Digraph(9)), SizeError);
}

TEST(Io, RoundTrip) {
  std::mt19937 rng(2);
  for (int n : {0, 1, 6, 70}) {
    const Digraph d = random_digraph(n, 0.2, rng);
    EXPECT_EQ(parse_digraph(serialize_digraph(d)), d);
  }
}

TEST(Io, CommentsAndBlankLines) {
  const Digraph d = parse_digraph("# header comment\n\n3\n0 1\n  # arc list\n1 2\n");
  EXPECT_EQ(d.arc_count(), 2);
}

TEST(Io, ErrorsCarryLineNumbers) {
  auto line_of = [](const char *text) {
    try {
      parse_digraph(text);
    } catch (const ParseError &e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("3\n0 1\n0 5\n"), 3);
  EXPECT_EQ(line_of("3\n2 2\n"), 2);
  EXPECT_EQ(line_of("3\n0 x\n"), 2);
  EXPECT_EQ(line_of("3 4\n"), 1);
  EXPECT_EQ(line_of("# nothing\n"), 1);
}

TEST(Io, DotExport) {
  const auto dot = to_dot(make_digraph(2, {{0, 1}}), "G");
  EXPECT_NE(dot.find("digraph G {"), std::string::npos);
  EXPECT_NE(dot.find("0 -> 1;"), std::string::npos);
}
