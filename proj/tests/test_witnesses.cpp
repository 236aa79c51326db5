#include <chromprof/constructions.hpp>
#include <chromprof/patterns.hpp>
#include <chromprof/witnesses.hpp>

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace chromprof;

namespace {

auto complete_double(int n) -> Digraph { return double_orientation(complete_graph(n)); }

auto multipartite_double(std::vector<int> parts) -> Digraph {
  return double_orientation(complete_multipartite_graph(parts));
}

// Oracle: an arc-by-arc check that the map is injective and carries every
// pattern arc.
auto arcs_hold(const Digraph &host, const Digraph &pattern, const std::vector<int> &map) -> bool {
  if (static_cast<int>(map.size()) != pattern.vertex_count())
    return false;
  for (std::size_t i = 0; i < map.size(); ++i)
    for (std::size_t j = i + 1; j < map.size(); ++j)
      if (map[i] == map[j])
        return false;
  for (auto [u, v] : pattern.arcs())
    if (!host.has_arc(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)]))
      return false;
  return true;
}

// Oracle: T3 by scanning all triples.
auto brute_has_t3(const Digraph &d) -> bool {
  const int n = d.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (a != b && b != c && a != c && d.has_arc(a, b) && d.has_arc(a, c) && d.has_arc(b, c))
          return true;
  return false;
}

auto random_digraph(int n, double p, std::mt19937 &rng) -> Digraph {
  std::bernoulli_distribution coin(p);
  Digraph d(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && coin(rng))
        d.add_arc(i, j);
  return d;
}

auto add_double(Digraph &d, int a, int b) -> void {
  d.add_arc(a, b);
  d.add_arc(b, a);
}

// Hosts with a planted C5'' on 0..4, laid out as v1..v5 = 0..4 so that the
// embedding map (A..E) is {0, 4, 3, 2, 1}. X = 5..10, W = 11..14.
const std::vector<int> kPlanted{0, 4, 3, 2, 1};

auto planted_base() -> Digraph {
  Digraph d(15);
  for (auto [u, v] : std::initializer_list<Arc>{{0, 1}, {1, 2}, {2, 3}, {4, 3}, {0, 4}})
    d.add_arc(u, v);
  for (int w = 11; w < 15; ++w) {
    d.add_arc(0, w);
    for (int s : {1, 2, 4})
      d.add_arc(s, w);
    for (int w2 = w + 1; w2 < 15; ++w2)
      add_double(d, w, w2);
    for (int s : {1, 2, 4})
      d.add_arc(w, s);
  }
  for (int s : {1, 2, 4})
    d.add_arc(s, 0);
  for (int x = 5; x <= 10; ++x) {
    d.add_arc(3, x);
    d.add_arc(x, 0);
  }
  return d;
}

auto planted_inside_x() -> Digraph {
  Digraph d = planted_base();
  for (int x = 5; x <= 10; ++x)
    for (int y = x + 1; y <= 10; ++y)
      add_double(d, x, y);
  return d;
}

auto planted_cross_arc() -> Digraph {
  Digraph d = planted_base();
  for (int i = 0; i < 6; ++i)
    add_double(d, 5 + i, 5 + (i + 1) % 6);
  for (int x = 5; x <= 10; ++x)
    for (int w : {11, 12, 13})
      d.add_arc(x, w);
  return d;
}

auto planted_common() -> Digraph {
  Digraph d = planted_inside_x();
  d.add_arc(0, 7);
  return d;
}

} // namespace

TEST(FindTr, CompleteAndMultipartiteHosts) {
  // K_r itself misses the bound for r >= 3 (r - 1 < (r-2)r/(r-1) + 1); K_2r meets it.
  for (int r = 3; r <= 6; ++r) {
    EXPECT_THROW(find_tr_by_degree(complete_double(r), r), HypothesisError);
    const Digraph host = complete_double(2 * r);
    EXPECT_TRUE(arcs_hold(host, transitive_tournament(r), find_tr_by_degree(host, r).map));
  }
  const Digraph k333 = multipartite_double({3, 3, 3});
  const auto e3 = find_tr_by_degree(k333, 3);
  EXPECT_TRUE(arcs_hold(k333, transitive_tournament(3), e3.map));
  std::set<int> parts3;
  for (int x : e3.map)
    parts3.insert(x / 3);
  EXPECT_EQ(parts3.size(), 3u);

  const Digraph k4444 = multipartite_double({4, 4, 4, 4});
  const auto e4 = find_tr_by_degree(k4444, 4);
  EXPECT_TRUE(arcs_hold(k4444, transitive_tournament(4), e4.map));
  std::set<int> parts4;
  for (int x : e4.map)
    parts4.insert(x / 4);
  EXPECT_EQ(parts4.size(), 4u);
}

TEST(FindTr, HypothesisGate) {
  EXPECT_THROW(find_tr_by_degree(directed_cycle(5), 3), HypothesisError);
  EXPECT_THROW(find_tr_by_degree(multipartite_double({3, 3, 3}), 4), HypothesisError);
  EXPECT_THROW(find_tr_by_degree(Digraph(0), 3), HypothesisError);
  EXPECT_THROW(find_tr_by_degree(complete_double(3), 0), ParameterError);
}

TEST(FindTr, RandomHostsMeetingTheBound) {
  std::mt19937 rng(61);
  int tried = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 3 + trial % 10;
    const Digraph d = random_digraph(n, 0.85, rng);
    for (int r = 3; r <= 5; ++r) {
      if ((r - 1) * (min_out_degree(d) - 1) < (r - 2) * n)
        continue;
      ++tried;
      const auto e = find_tr_by_degree(d, r);
      EXPECT_TRUE(arcs_hold(d, transitive_tournament(r), e.map));
    }
  }
  EXPECT_GT(tried, 100);
}

TEST(FindCycle, Examples) {
  struct Case {
    int n, len;
  };
  for (auto c : {Case{5, 3}, Case{7, 5}, Case{8, 4}}) {
    const Digraph d = complete_double(c.n);
    const auto e = find_directed_cycle(d, c.len);
    EXPECT_TRUE(arcs_hold(d, directed_cycle(c.len), e.map));
  }
  EXPECT_THROW(find_directed_cycle(a_n(7), 3), HypothesisError);
  EXPECT_THROW(find_directed_cycle(complete_double(5), 2), ParameterError);
}

TEST(FindCycle, RandomHostsMeetingTheBound) {
  std::mt19937 rng(67);
  int tried = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 3 + trial % 10;
    const Digraph d = random_digraph(n, 0.85, rng);
    for (int len = 3; len <= 5; ++len) {
      if (len > n || 2 * min_out_degree(d) < n + len - 2)
        continue;
      ++tried;
      EXPECT_TRUE(arcs_hold(d, directed_cycle(len), find_directed_cycle(d, len).map));
    }
  }
  EXPECT_GT(tried, 100);
}

TEST(FindC5pp, DenseHostAgreesWithContainment) {
  const Digraph d = complete_double(5);
  const auto r = find_c5pp_from_triangle(d);
  ASSERT_TRUE(found(r));
  EXPECT_TRUE(arcs_hold(d, c5_pattern(C5Orientation::DoublePrime), found(r)->embedding.map));
  EXPECT_TRUE(contains_pattern(d, PatternId::c5(C5Orientation::DoublePrime)));
}

TEST(FindC5pp, Gates) {
  const std::vector<int> sizes(5, 2);
  EXPECT_THROW(find_c5pp_from_triangle(double_orientation(blowup(cycle_graph(5), sizes))), HypothesisError);
  EXPECT_THROW(find_c5pp_from_triangle(c3_blowup_n(6)), HypothesisError);
}

TEST(FindC5pp, PlantedTriangleRandomHosts) {
  std::mt19937 rng(71);
  int found_count = 0, stall_count = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Digraph d = random_digraph(12, 0.6, rng);
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        add_double(d, a, b);
    if (min_out_degree(d) < 5)
      continue;
    const auto r = find_c5pp_from_triangle(d);
    if (const auto *f = found(r)) {
      ++found_count;
      EXPECT_TRUE(arcs_hold(d, c5_pattern(C5Orientation::DoublePrime), f->embedding.map));
    } else {
      ++stall_count;
      EXPECT_FALSE(stalled(r)->stage.empty());
    }
  }
  EXPECT_GT(found_count + stall_count, 50);
}

TEST(FindC5p, CommonOutNeighbourOnDenseHost) {
  const Digraph d = complete_double(6);
  const auto e = contains_pattern(d, PatternId::c5(C5Orientation::DoublePrime));
  ASSERT_TRUE(e);
  const auto r = find_c5p_from_c5pp(d, *e);
  ASSERT_TRUE(found(r));
  EXPECT_EQ(found(r)->route, "common-out-neighbour");
  EXPECT_TRUE(arcs_hold(d, c5_pattern(C5Orientation::Prime), found(r)->embedding.map));
}

TEST(FindC5p, PlantedBranches) {
  struct Case {
    Digraph host;
    const char *route;
  };
  for (const auto &c : {Case{planted_common(), "common-out-neighbour"}, Case{planted_inside_x(), "inside-x"},
                        Case{planted_cross_arc(), "cross-arc"}}) {
    ASSERT_GT(3 * min_out_degree(c.host), c.host.vertex_count()) << c.route;
    const Embedding e{5, kPlanted};
    ASSERT_TRUE(arcs_hold(c.host, c5_pattern(C5Orientation::DoublePrime), e.map));
    const auto r = find_c5p_from_c5pp(c.host, e);
    ASSERT_TRUE(found(r)) << c.route;
    EXPECT_EQ(found(r)->route, c.route);
    EXPECT_TRUE(arcs_hold(c.host, c5_pattern(C5Orientation::Prime), found(r)->embedding.map));
  }
}

TEST(FindC5p, NeverSucceedsOnPrimeFreeHosts) {
  for (int n = 5; n <= 14; ++n) {
    const Digraph d = b_n(n);
    ASSERT_FALSE(contains_pattern(d, PatternId::c5(C5Orientation::Prime)));
    const auto e = contains_pattern(d, PatternId::c5(C5Orientation::DoublePrime));
    if (n == 14)
      EXPECT_TRUE(e.has_value());
    if (!e)
      continue;
    try {
      EXPECT_FALSE(found(find_c5p_from_c5pp(d, *e)));
    } catch (const HypothesisError &) {
    }
  }
}

TEST(FindC5p, RejectsInvalidEmbedding) {
  EXPECT_THROW(find_c5p_from_c5pp(complete_double(6), Embedding{5, {0, 0, 1, 2, 3}}), HypothesisError);
}

TEST(Morph, AllTargetsOnPentagonBlowup) {
  const std::vector<int> sizes(5, 3);
  const Digraph d = double_orientation(blowup(cycle_graph(5), sizes));
  const std::vector<int> start{0, 3, 6, 9, 12};
  for (auto o : {C5Orientation::Prime, C5Orientation::DoublePrime, C5Orientation::TriplePrime}) {
    const auto r = morph_pentagon(d, start, PatternId::c5(o));
    ASSERT_TRUE(found(r));
    EXPECT_TRUE(arcs_hold(d, c5_pattern(o), found(r)->embedding.map));
  }
}

TEST(Morph, Gates) {
  const std::vector<int> cycle{0, 5, 10, 1, 6};
  EXPECT_THROW(morph_pentagon(c3_blowup_n(15), cycle, PatternId::c5(C5Orientation::Prime)), HypothesisError);
  const std::vector<int> sizes(5, 3);
  const Digraph d = double_orientation(blowup(cycle_graph(5), sizes));
  const std::vector<int> broken{0, 1, 6, 9, 12};
  EXPECT_THROW(morph_pentagon(d, broken, PatternId::c5(C5Orientation::Prime)), ShapeError);
  const std::vector<int> start{0, 3, 6, 9, 12};
  EXPECT_THROW(morph_pentagon(d, start, PatternId::directed_cycle(5)), ParameterError);
}

TEST(Morph, StallWithoutFreshNeighbours) {
  // A bare double-oriented C5 has no vertex outside the cycle to swap in.
  const Digraph d = double_orientation(cycle_graph(5));
  const std::vector<int> start{0, 1, 2, 3, 4};
  const auto r = morph_pentagon(d, start, PatternId::c5(C5Orientation::Prime));
  ASSERT_TRUE(stalled(r));
  EXPECT_EQ(stalled(r)->partial.size(), 5u);
}

TEST(Saturation, MaximalAndIdempotent) {
  std::vector<Digraph> inputs{directed_cycle(3), Digraph(4), extremal_aes(10, 3)};
  std::mt19937 rng(73);
  while (inputs.size() < 60) {
    const Digraph d = random_digraph(6, 0.25, rng);
    if (!brute_has_t3(d))
      inputs.push_back(d);
  }
  for (const auto &in : inputs) {
    const auto res = saturate_tr(in, 3);
    const Digraph &s = res.saturated;
    EXPECT_FALSE(brute_has_t3(s));
    for (auto [u, v] : in.arcs())
      EXPECT_TRUE(s.has_arc(u, v));
    EXPECT_EQ(s.arc_count(), in.arc_count() + static_cast<int>(res.added_arcs.size()));
    EXPECT_GE(min_out_degree(s), in.vertex_count() ? min_out_degree(in) : 0);
    for (int u = 0; u < s.vertex_count(); ++u)
      for (int v = 0; v < s.vertex_count(); ++v) {
        if (u == v || s.has_arc(u, v))
          continue;
        Digraph more = s;
        more.add_arc(u, v);
        EXPECT_TRUE(brute_has_t3(more));
      }
    EXPECT_TRUE(is_tr_saturated(s, 3));
    EXPECT_TRUE(saturate_tr(s, 3).added_arcs.empty());
  }
}

TEST(Saturation, Gates) {
  EXPECT_THROW(saturate_tr(transitive_tournament(3), 3), HypothesisError);
  EXPECT_THROW(saturate_tr(Digraph(3), 1), ParameterError);
}

TEST(Wheel, OwnLabellingVerifies) {
  const auto lay = wheel_like_layout(4, 1);
  WheelExtraction w{lay.v, lay.w1, lay.w2, lay.q1, lay.q2, 1};
  Digraph d = wheel_like(4, 1);
  EXPECT_TRUE(verify_wheel_like(d, w, 4));
  d.remove_arc(lay.q1[0], lay.q1[1]);
  EXPECT_FALSE(verify_wheel_like(d, w, 4));
}

TEST(Wheel, ExtractionFromSaturatedHosts) {
  std::mt19937 rng(79);
  int extracted = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int r = 3 + trial % 2;
    const Digraph d = random_digraph(7, 0.2, rng);
    if (contains_transitive_tournament(d, r))
      continue;
    const Digraph s = saturate_tr(d, r).saturated;
    try {
      const auto w = extract_wheel(s, r);
      ++extracted;
      EXPECT_TRUE(verify_wheel_like(s, w, r));
      EXPECT_FALSE(underlying_graph(s).adjacent(w.v, w.w1));
      EXPECT_FALSE(underlying_graph(s).adjacent(w.v, w.w2));
      EXPECT_LE(w.t, r - 2);
    } catch (const HypothesisError &) {
    }
  }
  EXPECT_GT(extracted, 20);
}

TEST(Wheel, Gates) {
  // A double-oriented complete multipartite host is saturated but yields no triple.
  EXPECT_THROW(extract_wheel(multipartite_double({2, 2}), 3), HypothesisError);
  EXPECT_THROW(extract_wheel(Digraph(4), 3), HypothesisError);
  EXPECT_THROW(extract_wheel(Digraph(4), 2), ParameterError);
}
