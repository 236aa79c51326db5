#pragma once

#include "patterns.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace chromprof {

/// Proper vertex colouring of the underlying graph with classes 0..k-1.
struct Coloring {
  int k = 0;
  std::vector<int> classes;
};

inline auto is_proper_coloring(const Graph &g, const Coloring &c) -> bool {
  if (static_cast<int>(c.classes.size()) != g.vertex_count())
    return false;
  for (int x : c.classes)
    if (x < 0 || x >= c.k)
      return false;
  for (auto [u, v] : g.edges())
    if (c.classes[static_cast<std::size_t>(u)] == c.classes[static_cast<std::size_t>(v)])
      return false;
  return true;
}

inline auto is_proper_coloring(const Digraph &d, const Coloring &c) -> bool {
  return is_proper_coloring(underlying_graph(d), c);
}

namespace detail {

// DSATUR decision search: colour the most saturated vertex next (ties: most
// uncoloured neighbours, then lowest id) and only ever open one new colour.
class DsaturSearch {
public:
  DsaturSearch(const Graph &g, int k)
      : g_(g), k_(k), n_(g.vertex_count()), colour_(static_cast<std::size_t>(n_), -1),
        seen_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(k), 0), saturation_(static_cast<std::size_t>(n_), 0),
        uncoloured_(VertexSet::full(n_)) {}

  auto run() -> bool { return extend(0, 0); }
  auto colours() const -> const std::vector<int> & { return colour_; }

private:
  auto seen(int v, int c) -> int & {
    return seen_[static_cast<std::size_t>(v) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)];
  }

  auto pick() const -> int {
    int best = -1, best_sat = -1, best_deg = -1;
    uncoloured_.for_each([&](int v) {
      const int sat = saturation_[static_cast<std::size_t>(v)];
      if (sat < best_sat)
        return;
      const int deg = g_.neighbours(v).intersection_size(uncoloured_);
      if (sat > best_sat || deg > best_deg) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    });
    return best;
  }

  auto assign(int v, int c, int delta) -> void {
    g_.neighbours(v).for_each([&](int w) {
      int &cnt = seen(w, c);
      if (delta > 0 && cnt++ == 0)
        ++saturation_[static_cast<std::size_t>(w)];
      else if (delta < 0 && --cnt == 0)
        --saturation_[static_cast<std::size_t>(w)];
    });
  }

  auto extend(int coloured, int used) -> bool {
    if (coloured == n_)
      return true;
    const int v = pick();
    if (saturation_[static_cast<std::size_t>(v)] >= k_)
      return false;
    for (int c = 0; c < std::min(used + 1, k_); ++c) {
      if (seen(v, c) != 0)
        continue;
      colour_[static_cast<std::size_t>(v)] = c;
      uncoloured_.erase(v);
      assign(v, c, +1);
      if (extend(coloured + 1, std::max(used, c + 1)))
        return true;
      assign(v, c, -1);
      uncoloured_.insert(v);
      colour_[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }

  const Graph &g_;
  int k_;
  int n_;
  std::vector<int> colour_;
  std::vector<int> seen_;
  std::vector<int> saturation_;
  VertexSet uncoloured_;
};

inline auto greedy_clique_bound(const Graph &g) -> int {
  int best = g.vertex_count() > 0 ? 1 : 0;
  for (int s = 0; s < g.vertex_count(); ++s) {
    VertexSet cand = g.neighbours(s);
    int size = 1;
    while (!cand.empty()) {
      int pick = -1, pick_deg = -1;
      cand.for_each([&](int v) {
        const int deg = g.neighbours(v).intersection_size(cand);
        if (deg > pick_deg) {
          pick = v;
          pick_deg = deg;
        }
      });
      ++size;
      cand &= g.neighbours(pick);
    }
    best = std::max(best, size);
  }
  return best;
}

} // namespace detail

inline auto is_k_colorable(const Graph &g, int k) -> std::optional<Coloring> {
  if (k < 0)
    throw ParameterError("k must be non-negative");
  if (g.vertex_count() == 0)
    return Coloring{k, {}};
  if (k == 0)
    return std::nullopt;
  detail::DsaturSearch search(g, std::min(k, g.vertex_count()));
  if (!search.run())
    return std::nullopt;
  return Coloring{k, search.colours()};
}

inline auto is_k_colorable(const Digraph &d, int k) -> std::optional<Coloring> {
  return is_k_colorable(underlying_graph(d), k);
}

struct ChromaticResult {
  int chi = 0;
  Coloring witness;
};

/// Exact chromatic number: decision searches from a greedy clique lower bound
/// upward, so the first feasible k is optimal.
inline auto chromatic_number(const Graph &g) -> ChromaticResult {
  if (g.vertex_count() == 0)
    return {0, {0, {}}};
  for (int k = detail::greedy_clique_bound(g);; ++k)
    if (auto c = is_k_colorable(g, k))
      return {k, *c};
}

inline auto chromatic_number(const Digraph &d) -> ChromaticResult {
  return chromatic_number(underlying_graph(d));
}

struct IndependentSetResult {
  int alpha = 0;
  std::vector<int> vertices;
};

namespace detail {

// Maximum clique with greedy-colouring bounds (applied to the complement).
struct MaxClique {
  std::vector<VertexSet> adj;
  std::vector<int> current, best;

  auto expand(VertexSet candidates) -> void {
    // Colour classes give an upper bound on the clique inside `candidates`.
    std::vector<int> order, bound;
    VertexSet uncoloured = candidates;
    int colour = 0;
    while (!uncoloured.empty()) {
      ++colour;
      VertexSet q = uncoloured;
      while (!q.empty()) {
        const int v = q.first();
        q.erase(v);
        q -= adj[static_cast<std::size_t>(v)];
        uncoloured.erase(v);
        order.push_back(v);
        bound.push_back(colour);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + static_cast<std::size_t>(bound[i]) <= best.size())
        return;
      const int v = order[i];
      current.push_back(v);
      const VertexSet next = candidates & adj[static_cast<std::size_t>(v)];
      if (next.empty()) {
        if (current.size() > best.size())
          best = current;
      } else {
        expand(next);
      }
      current.pop_back();
      candidates.erase(v);
    }
  }
};

} // namespace detail

inline auto independence_number(const Graph &g) -> IndependentSetResult {
  const int n = g.vertex_count();
  if (n == 0)
    return {};
  detail::MaxClique mc;
  for (int v = 0; v < n; ++v) {
    VertexSet non = g.neighbours(v).complement();
    non.erase(v);
    mc.adj.push_back(std::move(non));
  }
  mc.expand(VertexSet::full(n));
  std::sort(mc.best.begin(), mc.best.end());
  return {static_cast<int>(mc.best.size()), mc.best};
}

inline auto independence_number(const Digraph &d) -> IndependentSetResult {
  return independence_number(underlying_graph(d));
}

inline auto is_independent_set(const Graph &g, std::span<const int> vs) -> bool {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (vs[i] == vs[j] || g.adjacent(vs[i], vs[j]))
        return false;
  return true;
}

struct BipartiteResult {
  bool bipartite = false;
  std::vector<int> sides;     ///< 2-colouring when bipartite
  std::vector<int> odd_cycle; ///< shortest odd cycle otherwise
};

inline auto is_bipartite(const Graph &g) -> BipartiteResult {
  const int n = g.vertex_count();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  for (int root = 0; root < n; ++root) {
    if (side[static_cast<std::size_t>(root)] >= 0)
      continue;
    side[static_cast<std::size_t>(root)] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      bool clash = false;
      g.neighbours(u).for_each([&](int w) {
        auto &sw = side[static_cast<std::size_t>(w)];
        if (sw < 0) {
          sw = 1 - side[static_cast<std::size_t>(u)];
          queue.push_back(w);
        } else if (sw == side[static_cast<std::size_t>(u)]) {
          clash = true;
        }
      });
      if (clash)
        return {false, {}, odd_girth(g).witness};
    }
  }
  return {true, side, {}};
}

inline auto is_bipartite(const Digraph &d) -> BipartiteResult { return is_bipartite(underlying_graph(d)); }

} // namespace chromprof
