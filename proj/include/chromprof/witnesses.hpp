#pragma once

// Constructive finders that follow the degree arguments step by step. Each
// returns a validated embedding; finite instances that fall outside what an
// argument can handle produce a Stall carrying the partial state.

#include "constructions.hpp"
#include "patterns.hpp"

#include <array>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace chromprof {

struct Stall {
  std::string stage;
  std::vector<int> partial;
  std::map<std::string, int> counters;
};

struct Found {
  Embedding embedding;
  std::string route;
};

using FinderResult = std::variant<Found, Stall>;

inline auto found(const FinderResult &r) -> const Found * { return std::get_if<Found>(&r); }
inline auto stalled(const FinderResult &r) -> const Stall * { return std::get_if<Stall>(&r); }

namespace detail {

inline auto checked(const Digraph &host, const Digraph &pattern, Embedding e, const char *who) -> Embedding {
  if (!is_valid_embedding(host, pattern, e))
    throw InvariantViolation(std::string(who) + " produced an invalid embedding");
  return e;
}

inline auto common_out(const Digraph &d, std::span<const int> vs) -> VertexSet {
  VertexSet s = VertexSet::full(d.vertex_count());
  for (int v : vs)
    s &= d.out(v);
  return s;
}

inline auto tr_recurse(const Digraph &d, int r) -> std::vector<int> {
  const int n = d.vertex_count();
  if (n == 0 || static_cast<long long>(r - 1) * (min_out_degree(d) - 1) < static_cast<long long>(r - 2) * n)
    throw InvariantViolation("degree bound lost inside the T_r recursion");
  if (r == 1)
    return {0};
  if (r == 2) {
    const int u = 0;
    return {u, d.out(u).first()};
  }
  int u = -1;
  for (int x = 0; x < n && u < 0; ++x)
    if (static_cast<long long>(r - 1) * (d.in_degree(x) - 1) >= static_cast<long long>(r - 2) * n)
      u = x;
  if (u < 0)
    throw InvariantViolation("no vertex with large in-degree");
  const auto sub = induced_subdigraph(d, d.out(u) & d.in(u));
  std::vector<int> chain{u};
  for (int q : tr_recurse(sub.digraph, r - 2))
    chain.push_back(sub.to_host[static_cast<std::size_t>(q)]);
  const int v = common_out(d, chain).first();
  if (v < 0)
    throw InvariantViolation("no common out-neighbour closes the tournament");
  chain.push_back(v);
  return chain;
}

} // namespace detail

/// T_r via the in-degree recursion. Requires (r-1)(delta+ - 1) >= (r-2)n.
/// The returned map lists the tournament in dominance order.
inline auto find_tr_by_degree(const Digraph &d, int r) -> Embedding {
  if (r < 1)
    throw ParameterError("r must be >= 1");
  const int n = d.vertex_count();
  if (n == 0 || static_cast<long long>(r - 1) * (min_out_degree(d) - 1) < static_cast<long long>(r - 2) * n)
    throw HypothesisError("find-tr needs delta+ >= (r-2)n/(r-1) + 1");
  return detail::checked(d, transitive_tournament(r), {r, detail::tr_recurse(d, r)}, "find_tr_by_degree");
}

/// Directed l-cycle from 2 delta+ >= n + l - 2; map[i] -> map[i+1] around.
inline auto find_directed_cycle(const Digraph &d, int len) -> Embedding {
  if (len < 3)
    throw ParameterError("cycle length must be >= 3");
  const int n = d.vertex_count();
  if (n == 0 || 2 * min_out_degree(d) < n + len - 2)
    throw HypothesisError("find-cycle needs delta+ >= (n+l-2)/2");
  int u = -1;
  for (int x = 0; x < n && u < 0; ++x)
    if (2 * d.in_degree(x) >= n + len - 2)
      u = x;
  if (u < 0)
    throw InvariantViolation("no vertex with large in-degree");
  const VertexSet inside = d.in(u);
  std::vector<int> cycle{u};
  int cur = (d.out(u) & inside).first();
  if (cur < 0)
    throw InvariantViolation("u has no anti-parallel neighbour");
  VertexSet used(n);
  used.insert(cur);
  cycle.push_back(cur);
  while (static_cast<int>(cycle.size()) < len) {
    const int next = ((d.out(cur) & inside) - used).first();
    if (next < 0)
      throw InvariantViolation("greedy path extension stalled");
    used.insert(next);
    cycle.push_back(next);
    cur = next;
  }
  return detail::checked(d, directed_cycle(len), {len, cycle}, "find_directed_cycle");
}

/// C5'' from a triangle: a triangle pair u -> v with three common
/// out-neighbours, two of which share an out-neighbour y outside {u, v}.
/// Map order is pattern A..E = u, x3, y, x1, v.
inline auto find_c5pp_from_triangle(const Digraph &d) -> FinderResult {
  const int n = d.vertex_count();
  const Graph g = underlying_graph(d);
  const auto og = odd_girth(g);
  if (!og.value || *og.value != 3)
    throw HypothesisError("find-c5pp needs a triangle (odd girth 3)");
  if (3 * min_out_degree(d) <= n)
    throw HypothesisError("find-c5pp needs delta+ > n/3");
  const Digraph pattern = c5_pattern(C5Orientation::DoublePrime);
  Stall stall{"common-out-neighbours", {}, {{"triangles", 0}, {"rich_pairs", 0}}};
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b))
        continue;
      for (int c = b + 1; c < n; ++c) {
        if (!g.adjacent(a, c) || !g.adjacent(b, c))
          continue;
        ++stall.counters["triangles"];
        const std::array<std::pair<int, int>, 3> pairs{{{a, b}, {a, c}, {b, c}}};
        for (auto [p, q] : pairs) {
          const int u = d.has_arc(p, q) ? p : q;
          const int v = u == p ? q : p;
          const auto common = (d.out(u) & d.out(v)).to_vector();
          if (common.size() < 3) {
            if (stall.partial.empty())
              stall.partial = {a, b, c};
            continue;
          }
          ++stall.counters["rich_pairs"];
          stall.stage = "shared-out-neighbour";
          stall.partial = {u, v};
          stall.partial.insert(stall.partial.end(), common.begin(), common.end());
          for (std::size_t i = 0; i < common.size(); ++i)
            for (std::size_t j = i + 1; j < common.size(); ++j) {
              VertexSet ys = d.out(common[i]) & d.out(common[j]);
              ys.erase(u);
              ys.erase(v);
              const int y = ys.first();
              if (y < 0)
                continue;
              Embedding e{5, {u, common[j], y, common[i], v}};
              return Found{detail::checked(d, pattern, e, "find_c5pp_from_triangle"), "triangle"};
            }
        }
      }
    }
  return stall;
}

/// C5' from a C5'' embedding, trying the three cases of the argument in
/// order: a common out-neighbour of v1 and v4, a directed path inside
/// X = N+(v4) \ N+(v1), or a cross arc from X into Y = N+(v1) \ N+(v4).
inline auto find_c5p_from_c5pp(const Digraph &d, const Embedding &e) -> FinderResult {
  const Digraph source = c5_pattern(C5Orientation::DoublePrime);
  if (!is_valid_embedding(d, source, e))
    throw HypothesisError("input is not a C5'' embedding");
  const int n = d.vertex_count();
  if (3 * min_out_degree(d) <= n)
    throw HypothesisError("find-c5p needs delta+ > n/3");
  const Digraph pattern = c5_pattern(C5Orientation::Prime);
  // Pattern A..E = 0..4; the argument names them v1 = A, v2 = E, v3 = D, v4 = C, v5 = B.
  const int v1 = e.map[0], v2 = e.map[4], v3 = e.map[3], v4 = e.map[2], v5 = e.map[1];
  auto done = [&](std::vector<int> map, const char *route) -> FinderResult {
    return Found{detail::checked(d, pattern, {5, std::move(map)}, "find_c5p_from_c5pp"), route};
  };

  VertexSet common = d.out(v1) & d.out(v4);
  for (int x : {v2, v3, v5})
    common.erase(x);
  if (const int z = common.first(); z >= 0)
    return done({v1, z, v4, v3, v2}, "common-out-neighbour");

  const VertexSet x_set = d.out(v4) - d.out(v1);
  const VertexSet y_set = d.out(v1) - d.out(v4);
  const auto inner = induced_subdigraph(d, x_set);
  if (inner.digraph.vertex_count() > 0 && min_out_degree(inner.digraph) >= 4) {
    std::vector<int> path{x_set.first()};
    VertexSet used(n);
    used.insert(path.back());
    while (path.size() < 4) {
      const int next = ((d.out(path.back()) & x_set) - used).first();
      if (next < 0)
        throw InvariantViolation("path inside X stalled despite out-degree 4");
      used.insert(next);
      path.push_back(next);
    }
    return done({v4, path[3], path[2], path[1], path[0]}, "inside-x");
  }

  // Vertices with few out-neighbours inside X are the ones the argument sends across.
  std::vector<int> xs;
  for (int pass = 0; pass < 2; ++pass)
    x_set.for_each([&](int x) {
      if (x == v1 || x == v5)
        return;
      const bool low = (d.out(x) & x_set).size() < 4;
      if (low == (pass == 0))
        xs.push_back(x);
    });
  for (int x : xs) {
    VertexSet ys = d.out(x) & y_set;
    ys.erase(v4);
    ys.erase(v5);
    if (const int y = ys.first(); y >= 0)
      return done({v1, y, x, v4, v5}, "cross-arc");
  }
  std::vector<int> partial{v1, v2, v3, v4, v5};
  return Stall{"no-branch",
               partial,
               {{"common", common.size()}, {"x", x_set.size()}, {"y", y_set.size()},
                {"x_min_out", inner.digraph.vertex_count() > 0 ? min_out_degree(inner.digraph) : 0}}};
}

namespace detail {

inline auto replacement_schedule(PatternKind target) -> std::vector<int> {
  switch (target) {
  case PatternKind::C5Prime:
    return {4, 3, 2, 1};
  case PatternKind::C5DoublePrime:
    return {1, 3, 2};
  case PatternKind::C5TriplePrime:
    return {1, 3};
  default:
    throw ParameterError("morph target must be C5', C5'' or C5'''");
  }
}

// Orientation of the cycle edges as currently known: forward[i] says whether
// cycle[i] -> cycle[i+1] is the arc being used.
inline auto cycle_digraph(const std::vector<bool> &forward) -> Digraph {
  Digraph p(5);
  for (int i = 0; i < 5; ++i) {
    const int j = (i + 1) % 5;
    if (forward[static_cast<std::size_t>(i)])
      p.add_arc(i, j);
    else
      p.add_arc(j, i);
  }
  return p;
}

} // namespace detail

/// Reorients a 5-cycle into `target` by repeatedly replacing a cycle vertex
/// with a fresh common out-neighbour of its two cycle neighbours.
inline auto morph_pentagon(const Digraph &d, std::span<const int> start, const PatternId &target) -> FinderResult {
  const auto schedule = detail::replacement_schedule(target.kind);
  const Graph g = underlying_graph(d);
  if (start.size() != 5)
    throw ShapeError("starting cycle must have 5 vertices");
  for (std::size_t i = 0; i < 5; ++i) {
    const int a = start[i], b = start[(i + 1) % 5];
    if (a < 0 || a >= d.vertex_count() || b < 0 || b >= d.vertex_count() || !g.adjacent(a, b))
      throw ShapeError("starting vertices do not form a 5-cycle");
  }
  const auto og = odd_girth(g);
  if (!og.value || *og.value != 5)
    throw HypothesisError("morph needs odd girth 5");
  if (3 * min_out_degree(d) <= d.vertex_count())
    throw HypothesisError("morph needs delta+ > n/3");
  const Digraph pattern = pattern_digraph(target);

  std::optional<Stall> first_stall;
  for (int reflect = 0; reflect < 2; ++reflect)
    for (int shift = 0; shift < 5; ++shift) {
      std::vector<int> cycle(5);
      for (int i = 0; i < 5; ++i) {
        const int k = reflect ? (shift - i + 5) % 5 : (shift + i) % 5;
        cycle[static_cast<std::size_t>(i)] = start[static_cast<std::size_t>(k)];
      }
      std::vector<bool> forward(5);
      for (int i = 0; i < 5; ++i)
        forward[static_cast<std::size_t>(i)] =
            d.has_arc(cycle[static_cast<std::size_t>(i)], cycle[static_cast<std::size_t>((i + 1) % 5)]);
      bool ok = true;
      int steps = 0;
      for (int pos : schedule) {
        const int prev = cycle[static_cast<std::size_t>((pos + 4) % 5)];
        const int next = cycle[static_cast<std::size_t>((pos + 1) % 5)];
        VertexSet fresh = d.out(prev) & d.out(next);
        for (int c : cycle)
          fresh.erase(c);
        const int pick = fresh.first();
        if (pick < 0) {
          if (!first_stall)
            first_stall = Stall{"replace-position-" + std::to_string(pos), cycle, {{"steps_done", steps}}};
          ok = false;
          break;
        }
        cycle[static_cast<std::size_t>(pos)] = pick;
        forward[static_cast<std::size_t>((pos + 4) % 5)] = true;
        forward[static_cast<std::size_t>(pos)] = false;
        ++steps;
      }
      if (!ok)
        continue;
      const Digraph shape = detail::cycle_digraph(forward);
      const auto local = find_embedding(shape, pattern);
      if (!local)
        throw InvariantViolation("replacement schedule did not produce the target orientation");
      Embedding e{5, {}};
      for (int x : local->map)
        e.map.push_back(cycle[static_cast<std::size_t>(x)]);
      return Found{detail::checked(d, pattern, e, "morph_pentagon"),
                   (reflect ? "reflected-shift-" : "shift-") + std::to_string(shift)};
    }
  return *first_stall;
}

// ---------------------------------------------------------------------------
// Saturation and wheel extraction.

struct SaturationResult {
  Digraph saturated;
  std::vector<Arc> added_arcs;
};

namespace detail {

inline auto creates_tr(Digraph &d, int u, int v, int r) -> bool {
  d.add_arc(u, v);
  const VertexSet need = VertexSet::of(d.vertex_count(), {u, v});
  const bool hit = find_transitive_tournament(d, r, &need).has_value();
  d.remove_arc(u, v);
  return hit;
}

} // namespace detail

/// Adds non-arcs in lexicographic order while the result stays T_r-free,
/// repeating full passes until one adds nothing.
inline auto saturate_tr(const Digraph &input, int r) -> SaturationResult {
  if (r < 2)
    throw ParameterError("saturation needs r >= 2");
  if (find_transitive_tournament(input, r))
    throw HypothesisError("input already contains T_" + std::to_string(r));
  SaturationResult out{input, {}};
  Digraph &d = out.saturated;
  const int n = d.vertex_count();
  for (bool changed = true; changed;) {
    changed = false;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v || d.has_arc(u, v) || detail::creates_tr(d, u, v, r))
          continue;
        d.add_arc(u, v);
        out.added_arcs.emplace_back(u, v);
        changed = true;
      }
  }
  return out;
}

/// True iff d is T_r-free and every missing arc would create a T_r.
inline auto is_tr_saturated(const Digraph &d, int r) -> bool {
  if (find_transitive_tournament(d, r))
    return false;
  Digraph work = d;
  for (int u = 0; u < d.vertex_count(); ++u)
    for (int v = 0; v < d.vertex_count(); ++v)
      if (u != v && !d.has_arc(u, v) && !detail::creates_tr(work, u, v, r))
        return false;
  return true;
}

struct WheelExtraction {
  int v = -1, w1 = -1, w2 = -1;
  std::vector<int> q1, q2; ///< each in dominance order
  int t = 0;
};

/// Finds v, w1, w2 with v non-adjacent to both w_i and w1 ~ w2 (first in
/// lexicographic order), then recovers each Q_i from the T_r that the arc
/// v -> w_i would create.
inline auto extract_wheel(const Digraph &dhat, int r) -> WheelExtraction {
  if (r < 3)
    throw ParameterError("wheel extraction needs r >= 3");
  if (!is_tr_saturated(dhat, r))
    throw HypothesisError("input is not T_" + std::to_string(r) + "-saturated");
  const Graph g = underlying_graph(dhat);
  const int n = dhat.vertex_count();
  WheelExtraction w;
  for (int v = 0; v < n && w.v < 0; ++v)
    for (int a = 0; a < n && w.v < 0; ++a)
      for (int b = a + 1; b < n; ++b)
        if (a != v && b != v && !g.adjacent(v, a) && !g.adjacent(v, b) && g.adjacent(a, b)) {
          w.v = v;
          w.w1 = a;
          w.w2 = b;
          break;
        }
  if (w.v < 0)
    throw HypothesisError("underlying graph is complete multipartite");
  Digraph work = dhat;
  for (auto [wi, q] : {std::pair{w.w1, &w.q1}, std::pair{w.w2, &w.q2}}) {
    work.add_arc(w.v, wi);
    const VertexSet need = VertexSet::of(n, {w.v, wi});
    const auto tr = find_transitive_tournament(work, r, &need);
    work.remove_arc(w.v, wi);
    if (!tr)
      throw InvariantViolation("saturated digraph gained no T_r from a missing arc");
    for (int x : tr->map)
      if (x != w.v && x != wi)
        q->push_back(x);
  }
  for (int x : w.q1)
    if (std::find(w.q2.begin(), w.q2.end(), x) != w.q2.end())
      ++w.t;
  return w;
}

namespace detail {

inline auto spans_transitive(const Digraph &d, std::vector<int> vs) -> bool {
  const auto sub = induced_subdigraph(d, vs);
  return find_transitive_tournament(sub.digraph, static_cast<int>(vs.size())).has_value();
}

} // namespace detail

/// Checks the three defining clauses of W_{r,t} for the given roles.
inline auto verify_wheel_like(const Digraph &d, const WheelExtraction &w, int r) -> bool {
  const int n = d.vertex_count();
  auto in_range = [n](int x) { return x >= 0 && x < n; };
  if (r < 3 || !in_range(w.v) || !in_range(w.w1) || !in_range(w.w2))
    return false;
  if (w.v == w.w1 || w.v == w.w2 || w.w1 == w.w2)
    return false;
  int shared = 0;
  for (const auto *q : {&w.q1, &w.q2}) {
    if (static_cast<int>(q->size()) != r - 2)
      return false;
    VertexSet seen(n);
    for (int x : *q) {
      if (!in_range(x) || seen.contains(x) || x == w.v || x == w.w1 || x == w.w2)
        return false;
      seen.insert(x);
    }
  }
  for (int x : w.q1)
    shared += static_cast<int>(std::count(w.q2.begin(), w.q2.end(), x));
  if (shared != w.t)
    return false;
  for (auto [q, wi] : {std::pair{&w.q1, w.w1}, std::pair{&w.q2, w.w2}}) {
    std::vector<int> with_v = *q, with_w = *q;
    with_v.push_back(w.v);
    with_w.push_back(wi);
    if (!detail::spans_transitive(d, with_v) || !detail::spans_transitive(d, with_w))
      return false;
  }
  return !d.adjacent(w.v, w.w1) && !d.adjacent(w.v, w.w2) && d.adjacent(w.w1, w.w2);
}

} // namespace chromprof
