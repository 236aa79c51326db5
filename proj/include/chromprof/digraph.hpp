#pragma once

#include "errors.hpp"
#include "vertex_set.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace chromprof {

using Arc = std::pair<int, int>;

/**
 * Loop-free digraph on vertices 0..n-1. Anti-parallel pairs are allowed,
 * parallel arcs cannot exist. Out- and in-adjacency are both stored as
 * bit rows and kept mirror-consistent by every mutator.
 */
class Digraph {
public:
  Digraph() = default;

  explicit Digraph(int n) : n_(n), out_(static_cast<std::size_t>(n), VertexSet(n)), in_(out_) {
    if (n < 0)
      throw RangeError("negative vertex count");
  }

  auto vertex_count() const -> int { return n_; }
  auto out(int v) const -> const VertexSet & { return out_[static_cast<std::size_t>(v)]; }
  auto in(int v) const -> const VertexSet & { return in_[static_cast<std::size_t>(v)]; }
  auto out_degree(int v) const -> int { return out(v).size(); }
  auto in_degree(int v) const -> int { return in(v).size(); }

  auto has_arc(int u, int v) const -> bool { return out(u).contains(v); }
  auto adjacent(int u, int v) const -> bool { return has_arc(u, v) || has_arc(v, u); }

  auto add_arc(int u, int v) -> void {
    check_pair(u, v);
    out_[static_cast<std::size_t>(u)].insert(v);
    in_[static_cast<std::size_t>(v)].insert(u);
  }

  auto remove_arc(int u, int v) -> void {
    check_pair(u, v);
    out_[static_cast<std::size_t>(u)].erase(v);
    in_[static_cast<std::size_t>(v)].erase(u);
  }

  auto arc_count() const -> int {
    int c = 0;
    for (const auto &row : out_)
      c += row.size();
    return c;
  }

  /// All arcs in lexicographic order.
  auto arcs() const -> std::vector<Arc> {
    std::vector<Arc> result;
    for (int u = 0; u < n_; ++u)
      out(u).for_each([&](int v) { result.emplace_back(u, v); });
    return result;
  }

  auto mirror_consistent() const -> bool {
    for (int u = 0; u < n_; ++u) {
      if (out(u).contains(u) || in(u).contains(u))
        return false;
      for (int v = 0; v < n_; ++v)
        if (out(u).contains(v) != in(v).contains(u))
          return false;
    }
    return true;
  }

  friend auto operator==(const Digraph &a, const Digraph &b) -> bool {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

private:
  auto check_pair(int u, int v) const -> void {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw RangeError("arc (" + std::to_string(u) + "," + std::to_string(v) + ") outside 0.." +
                       std::to_string(n_ - 1));
    if (u == v)
      throw LoopError("loop at vertex " + std::to_string(u));
  }

  int n_ = 0;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

/// Simple undirected graph on vertices 0..n-1.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), VertexSet(n)) {}

  auto vertex_count() const -> int { return n_; }
  auto neighbours(int v) const -> const VertexSet & { return adj_[static_cast<std::size_t>(v)]; }
  auto degree(int v) const -> int { return neighbours(v).size(); }
  auto adjacent(int u, int v) const -> bool { return neighbours(u).contains(v); }

  auto add_edge(int u, int v) -> void {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw RangeError("edge outside vertex range");
    if (u == v)
      throw LoopError("loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].insert(v);
    adj_[static_cast<std::size_t>(v)].insert(u);
  }

  auto edge_count() const -> int {
    int c = 0;
    for (const auto &row : adj_)
      c += row.size();
    return c / 2;
  }

  /// Edges {u,v} with u < v, lexicographic.
  auto edges() const -> std::vector<std::pair<int, int>> {
    std::vector<std::pair<int, int>> result;
    for (int u = 0; u < n_; ++u)
      neighbours(u).for_each([&](int v) {
        if (u < v)
          result.emplace_back(u, v);
      });
    return result;
  }

  auto min_degree() const -> int {
    int best = n_;
    for (int v = 0; v < n_; ++v)
      best = std::min(best, degree(v));
    return best;
  }

  friend auto operator==(const Graph &a, const Graph &b) -> bool {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

/// Injective vertex map witnessing that a pattern occurs as a subgraph.
struct Embedding {
  int pattern_size = 0;
  std::vector<int> map;

  friend auto operator==(const Embedding &, const Embedding &) -> bool = default;
};

inline auto make_digraph(int n, std::span<const Arc> arcs) -> Digraph {
  Digraph d(n);
  for (auto [u, v] : arcs)
    d.add_arc(u, v);
  return d;
}

inline auto make_digraph(int n, std::initializer_list<Arc> arcs) -> Digraph {
  return make_digraph(n, std::span<const Arc>(arcs.begin(), arcs.size()));
}

inline auto make_graph(int n, std::initializer_list<std::pair<int, int>> edges) -> Graph {
  Graph g(n);
  for (auto [u, v] : edges)
    g.add_edge(u, v);
  return g;
}

inline auto min_out_degree(const Digraph &d) -> int {
  if (d.vertex_count() == 0)
    throw EmptyError("minimum out-degree of the empty digraph");
  int best = d.vertex_count();
  for (int v = 0; v < d.vertex_count(); ++v)
    best = std::min(best, d.out_degree(v));
  return best;
}

inline auto underlying_graph(const Digraph &d) -> Graph {
  Graph g(d.vertex_count());
  for (auto [u, v] : d.arcs())
    g.add_edge(u, v);
  return g;
}

inline auto double_orientation(const Graph &g) -> Digraph {
  Digraph d(g.vertex_count());
  for (auto [u, v] : g.edges()) {
    d.add_arc(u, v);
    d.add_arc(v, u);
  }
  return d;
}

inline auto complete_graph(int n) -> Graph {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      g.add_edge(u, v);
  return g;
}

inline auto cycle_graph(int n) -> Graph {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    g.add_edge(i, (i + 1) % n);
  return g;
}

inline auto path_graph(int n) -> Graph {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i)
    g.add_edge(i, i + 1);
  return g;
}

inline auto complete_multipartite_graph(std::span<const int> parts) -> Graph {
  const int n = std::accumulate(parts.begin(), parts.end(), 0);
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p)
    part_of.insert(part_of.end(), static_cast<std::size_t>(parts[p]), static_cast<int>(p));
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)])
        g.add_edge(u, v);
  return g;
}

namespace detail {

// First vertex id of every blowup class; classes are laid out in order.
inline auto class_offsets(std::span<const int> sizes, int n) -> std::vector<int> {
  if (static_cast<int>(sizes.size()) != n)
    throw ParameterError("blowup needs one class size per vertex");
  std::vector<int> offsets(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 0)
      throw ParameterError("negative blowup class size");
    offsets[i + 1] = offsets[i] + sizes[i];
  }
  return offsets;
}

} // namespace detail

/// Replaces vertex v by an independent class of sizes[v] vertices; class v
/// occupies a contiguous id range, in vertex order. A size of 0 deletes v.
inline auto blowup(const Graph &g, std::span<const int> sizes) -> Graph {
  const auto off = detail::class_offsets(sizes, g.vertex_count());
  Graph result(off.back());
  for (auto [u, v] : g.edges())
    for (int a = off[static_cast<std::size_t>(u)]; a < off[static_cast<std::size_t>(u) + 1]; ++a)
      for (int b = off[static_cast<std::size_t>(v)]; b < off[static_cast<std::size_t>(v) + 1]; ++b)
        result.add_edge(a, b);
  return result;
}

/// Digraph blowup with the same layout as blowup().
inline auto blowup_digraph(const Digraph &d, std::span<const int> sizes) -> Digraph {
  const auto off = detail::class_offsets(sizes, d.vertex_count());
  Digraph result(off.back());
  for (auto [u, v] : d.arcs())
    for (int a = off[static_cast<std::size_t>(u)]; a < off[static_cast<std::size_t>(u) + 1]; ++a)
      for (int b = off[static_cast<std::size_t>(v)]; b < off[static_cast<std::size_t>(v) + 1]; ++b)
        result.add_arc(a, b);
  return result;
}

/// Disjoint union with all cross edges; G keeps ids 0..|G|-1, H is shifted by |G|.
inline auto join(const Graph &g, const Graph &h) -> Graph {
  const int ng = g.vertex_count();
  Graph result(ng + h.vertex_count());
  for (auto [u, v] : g.edges())
    result.add_edge(u, v);
  for (auto [u, v] : h.edges())
    result.add_edge(ng + u, ng + v);
  for (int u = 0; u < ng; ++u)
    for (int v = 0; v < h.vertex_count(); ++v)
      result.add_edge(u, ng + v);
  return result;
}

struct InducedSubdigraph {
  Digraph digraph;
  std::vector<int> to_host; ///< new id -> host id
};

/// D[S], relabelled 0..|S|-1 in increasing host-id order.
inline auto induced_subdigraph(const Digraph &d, const VertexSet &s) -> InducedSubdigraph {
  if (s.universe() != d.vertex_count())
    throw RangeError("vertex set universe does not match digraph");
  InducedSubdigraph result{Digraph(s.size()), s.to_vector()};
  std::vector<int> local(static_cast<std::size_t>(d.vertex_count()), -1);
  for (std::size_t i = 0; i < result.to_host.size(); ++i)
    local[static_cast<std::size_t>(result.to_host[i])] = static_cast<int>(i);
  for (std::size_t i = 0; i < result.to_host.size(); ++i)
    (d.out(result.to_host[i]) & s).for_each([&](int v) {
      result.digraph.add_arc(static_cast<int>(i), local[static_cast<std::size_t>(v)]);
    });
  return result;
}

inline auto induced_subdigraph(const Digraph &d, std::span<const int> vertices) -> InducedSubdigraph {
  VertexSet s(d.vertex_count());
  for (int v : vertices) {
    if (v < 0 || v >= d.vertex_count())
      throw RangeError("vertex " + std::to_string(v) + " outside digraph");
    s.insert(v);
  }
  return induced_subdigraph(d, s);
}

/// Digraph with arc (perm[u], perm[v]) for every arc (u, v).
inline auto relabel(const Digraph &d, std::span<const int> perm) -> Digraph {
  Digraph result(d.vertex_count());
  for (auto [u, v] : d.arcs())
    result.add_arc(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return result;
}

inline auto reverse(const Digraph &d) -> Digraph {
  Digraph result(d.vertex_count());
  for (auto [u, v] : d.arcs())
    result.add_arc(v, u);
  return result;
}

inline auto is_valid_embedding(const Digraph &host, const Digraph &pattern, const Embedding &e) -> bool {
  if (e.pattern_size != pattern.vertex_count() || static_cast<int>(e.map.size()) != e.pattern_size)
    return false;
  VertexSet used(host.vertex_count());
  for (int h : e.map) {
    if (h < 0 || h >= host.vertex_count() || used.contains(h))
      return false;
    used.insert(h);
  }
  for (auto [a, b] : pattern.arcs())
    if (!host.has_arc(e.map[static_cast<std::size_t>(a)], e.map[static_cast<std::size_t>(b)]))
      return false;
  return true;
}

/// Exact isomorphism certificate for n <= kMaxCanonicalOrder.
struct CanonicalForm {
  int n = 0;
  std::uint64_t arc_code = 0;

  friend auto operator==(const CanonicalForm &, const CanonicalForm &) -> bool = default;
  friend auto operator<=>(const CanonicalForm &, const CanonicalForm &) = default;
};

inline constexpr int kMaxCanonicalOrder = 8;

namespace detail {

// Bit index of ordered pair (i, j), i != j, in an n-vertex arc code.
constexpr auto arc_bit(int n, int i, int j) -> int { return i * (n - 1) + (j < i ? j : j - 1); }

} // namespace detail

/// Minimum of the arc encoding over all n! relabellings. Bits are ordered so
/// that pair (0,1) is the most significant.
inline auto canonical_form(const Digraph &d) -> CanonicalForm {
  const int n = d.vertex_count();
  if (n > kMaxCanonicalOrder)
    throw SizeError("canonical_form is exact only up to " + std::to_string(kMaxCanonicalOrder) +
                    " vertices; use invariant_hash for bucketing");
  const int bits = n * (n - 1);
  const auto arcs = d.arcs();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (auto [u, v] : arcs)
      code |= std::uint64_t{1} << (bits - 1 -
                                   detail::arc_bit(n, perm[static_cast<std::size_t>(u)],
                                                   perm[static_cast<std::size_t>(v)]));
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {n, n == 0 ? 0 : best};
}

/// Permutation-invariant fingerprint for bucketing; equal hashes prove nothing.
inline auto invariant_hash(const Digraph &d) -> std::uint64_t {
  const int n = d.vertex_count();
  std::vector<std::uint64_t> profile;
  for (int v = 0; v < n; ++v) {
    int triangles = 0;
    const auto nb = d.out(v) | d.in(v);
    nb.for_each([&](int a) {
      const auto other = (d.out(a) | d.in(a)) & nb;
      triangles += other.size();
    });
    profile.push_back((std::uint64_t(d.out_degree(v)) << 40) | (std::uint64_t(d.in_degree(v)) << 20) |
                      std::uint64_t(triangles / 2));
  }
  std::sort(profile.begin(), profile.end());
  std::uint64_t h = 1469598103934665603ULL ^ std::uint64_t(n);
  for (auto x : profile) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace detail {

// Backtracking search for a bijection preserving arcs in both directions.
inline auto iso_extend(const Digraph &a, const Digraph &b, std::vector<int> &map, VertexSet &used, int next) -> bool {
  const int n = a.vertex_count();
  if (next == n)
    return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used.contains(cand) || a.out_degree(next) != b.out_degree(cand) || a.in_degree(next) != b.in_degree(cand))
      continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev) {
      const int img = map[static_cast<std::size_t>(prev)];
      ok = a.has_arc(prev, next) == b.has_arc(img, cand) && a.has_arc(next, prev) == b.has_arc(cand, img);
    }
    if (!ok)
      continue;
    map[static_cast<std::size_t>(next)] = cand;
    used.insert(cand);
    if (iso_extend(a, b, map, used, next + 1))
      return true;
    used.erase(cand);
  }
  return false;
}

} // namespace detail

/// Exact for every size: canonical forms up to 8 vertices, backtracking beyond.
inline auto is_isomorphic(const Digraph &a, const Digraph &b) -> bool {
  if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count())
    return false;
  if (a.vertex_count() <= kMaxCanonicalOrder)
    return canonical_form(a) == canonical_form(b);
  if (invariant_hash(a) != invariant_hash(b))
    return false;
  std::vector<int> map(static_cast<std::size_t>(a.vertex_count()), -1);
  VertexSet used(a.vertex_count());
  return detail::iso_extend(a, b, map, used, 0);
}

} // namespace chromprof
