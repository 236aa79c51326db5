#include <chromprof/coloring.hpp>
#include <chromprof/constructions.hpp>
#include <chromprof/patterns.hpp>

#include <gtest/gtest.h>

using namespace chromprof;

namespace {

auto delta_plus(const Digraph &d) -> int {
  int best = d.vertex_count();
  for (int v = 0; v < d.vertex_count(); ++v) {
    int out = 0;
    for (int w = 0; w < d.vertex_count(); ++w)
      out += d.has_arc(v, w) ? 1 : 0;
    best = std::min(best, out);
  }
  return best;
}

auto has_cycle_free(const Digraph &d, int k) -> bool { return !contains_pattern(d, PatternId::directed_cycle(k)); }

} // namespace

TEST(Patterns, Shapes) {
  EXPECT_EQ(transitive_tournament(5).arc_count(), 10);
  EXPECT_EQ(tr_blowup(3, 2).vertex_count(), 6);
  EXPECT_EQ(tr_blowup(3, 2).arc_count(), 3 * 4);
  EXPECT_EQ(directed_cycle(4).arc_count(), 4);
  for (auto o : {C5Orientation::Arrow, C5Orientation::Prime, C5Orientation::DoublePrime, C5Orientation::TriplePrime})
    EXPECT_EQ(underlying_graph(c5_pattern(o)), cycle_graph(5));
  EXPECT_THROW(transitive_tournament(0), ParameterError);
}

TEST(Aes, DegreeChromaticAndFreeness) {
  struct Row {
    int n, r, delta;
  };
  // delta+ = (3r-7) n / (3r-4); chi = r.
  for (const Row row : {Row{10, 3, 4}, Row{15, 3, 6}, Row{16, 4, 10}, Row{40, 4, 25}, Row{22, 5, 16}}) {
    const Digraph d = extremal_aes(row.n, row.r);
    EXPECT_EQ(d.vertex_count(), row.n);
    EXPECT_EQ(delta_plus(d), row.delta) << row.n << "/" << row.r;
    EXPECT_EQ((3 * row.r - 7) * row.n, row.delta * (3 * row.r - 4));
    EXPECT_EQ(chromatic_number(d).chi, row.r);
    EXPECT_FALSE(contains_transitive_tournament(d, row.r));
    EXPECT_TRUE(contains_transitive_tournament(d, row.r - 1));
  }
}

TEST(Aes, DivisibilityErrorNamesModulus) {
  try {
    extremal_aes(41, 4);
    FAIL() << "expected ParameterError";
  } catch (const ParameterError &e) {
    EXPECT_NE(std::string(e.what()).find("divisible by 8"), std::string::npos);
  }
  EXPECT_THROW(extremal_aes(10, 2), ParameterError);
}

TEST(Aes, RelaxedCoversEveryOrder) {
  for (int n = 8; n <= 20; ++n) {
    const Digraph d = extremal_aes_relaxed(n, 4);
    EXPECT_EQ(d.vertex_count(), n);
    EXPECT_FALSE(contains_transitive_tournament(d, 4));
  }
  EXPECT_EQ(extremal_aes_relaxed(16, 4), extremal_aes(16, 4));
  EXPECT_THROW(extremal_aes_relaxed(7, 4), ParameterError);
}

TEST(An, DegreeAndFreeness) {
  for (int n = 3; n <= 12; ++n) {
    const Digraph d = a_n(n);
    EXPECT_EQ(delta_plus(d), (n - 1) / 2);
    EXPECT_EQ(chromatic_number(d).chi, 3);
    EXPECT_TRUE(has_cycle_free(d, 3));
    EXPECT_TRUE(has_cycle_free(d, 5));
  }
  EXPECT_THROW(a_n(2), ParameterError);
}

TEST(Bn, LayoutDegreeAndFreeness) {
  for (int n = 5; n <= 14; ++n) {
    const auto lay = b_n_layout(n);
    EXPECT_EQ(lay.x_size + lay.y_size + lay.z_size, n - 2);
    EXPECT_LE(lay.x_size - lay.z_size, 1);
    const Digraph d = b_n(n);
    EXPECT_EQ(delta_plus(d), (n - 2) / 3);
    EXPECT_EQ(chromatic_number(d).chi, 3);
    EXPECT_FALSE(contains_pattern(d, PatternId::c5(C5Orientation::Prime)));
  }
  EXPECT_THROW(b_n(4), ParameterError);
}

TEST(C3Blowup, BalancedAndPentagonFree) {
  for (int n = 3; n <= 13; ++n) {
    const auto s = c3_blowup_sizes(n);
    EXPECT_EQ(s[0] + s[1] + s[2], n);
    const Digraph d = c3_blowup_n(n);
    EXPECT_EQ(delta_plus(d), n / 3);
    EXPECT_EQ(chromatic_number(d).chi, 3);
    EXPECT_FALSE(contains_pattern(d, PatternId::c5(C5Orientation::DoublePrime)));
    EXPECT_FALSE(contains_pattern(d, PatternId::c5(C5Orientation::TriplePrime)));
  }
}

TEST(Wheel, VertexCountAndRoles) {
  for (int r = 3; r <= 6; ++r)
    for (int t = 0; t <= r - 2; ++t) {
      const Digraph d = wheel_like(r, t);
      ASSERT_EQ(d.vertex_count(), 2 * (r - 2) - t + 3);
      const auto lay = wheel_like_layout(r, t);
      EXPECT_TRUE(d.has_arc(lay.w1, lay.w2));
      for (const auto *q : {&lay.q1, &lay.q2}) {
        EXPECT_EQ(static_cast<int>(q->size()), r - 2);
        for (int x : *q)
          EXPECT_TRUE(d.has_arc(lay.v, x));
      }
      // v and w1 are non-adjacent; the arc v -> w1 would complete a T_r on v + Q1 + w1.
      EXPECT_FALSE(d.adjacent(lay.v, lay.w1));
      EXPECT_FALSE(d.adjacent(lay.v, lay.w2));
      std::vector<int> vs{lay.v};
      vs.insert(vs.end(), lay.q1.begin(), lay.q1.end());
      vs.push_back(lay.w1);
      Digraph closed = d;
      closed.add_arc(lay.v, lay.w1);
      EXPECT_FALSE(contains_transitive_tournament(induced_subdigraph(d, vs).digraph, r));
      EXPECT_TRUE(contains_transitive_tournament(induced_subdigraph(closed, vs).digraph, r));
    }
  EXPECT_EQ(wheel_like(4, 1).vertex_count(), 6);
  EXPECT_THROW(wheel_like(4, 3), ParameterError);
  EXPECT_THROW(wheel_like(2, 0), ParameterError);
}

TEST(Remark, ExactPartsAndDegree) {
  // e = 1/20, n = 40: parts 4, 18, 18.
  const Rational eps{1, 20};
  const auto lay = remark_layout(40, eps);
  EXPECT_EQ(lay.a_size, 4);
  EXPECT_EQ(lay.b_size, 18);
  EXPECT_EQ(lay.c_size, 18);
  const Digraph d = remark_construction(40, eps);
  EXPECT_EQ(delta_plus(d), 18);
  EXPECT_EQ(chromatic_number(d).chi, 3);
  EXPECT_TRUE(has_cycle_free(d, 3));
  EXPECT_THROW(remark_layout(41, eps), ParameterError);
  EXPECT_THROW(remark_layout(40, Rational{1, 0}), ParameterError);
  EXPECT_THROW(remark_layout(40, Rational{1, 10}), ParameterError);
}
