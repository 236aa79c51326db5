#pragma once

#include "constructions.hpp"
#include "io.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace chromprof {

enum class PatternKind {
  TransitiveTournament,
  TransitiveBlowup,
  DirectedCycle,
  C5Arrow,
  C5Prime,
  C5DoublePrime,
  C5TriplePrime,
  Custom
};

inline constexpr int kMaxPatternOrder = 8;

/// A forbidden pattern H. `r` and `t` carry the parameters of the
/// parameterised kinds; Custom carries its own digraph.
struct PatternId {
  PatternKind kind = PatternKind::TransitiveTournament;
  int r = 0;
  int t = 0;
  std::shared_ptr<const Digraph> custom;
  std::string label;

  static auto transitive(int r) -> PatternId { return checked({PatternKind::TransitiveTournament, r, 1, nullptr, {}}); }
  static auto transitive_blowup(int r, int t) -> PatternId { return checked({PatternKind::TransitiveBlowup, r, t, nullptr, {}}); }
  static auto directed_cycle(int k) -> PatternId { return checked({PatternKind::DirectedCycle, k, 0, nullptr, {}}); }
  static auto c5(C5Orientation which) -> PatternId {
    switch (which) {
    case C5Orientation::Arrow:
      return {PatternKind::C5Arrow, 0, 0, nullptr, {}};
    case C5Orientation::Prime:
      return {PatternKind::C5Prime, 0, 0, nullptr, {}};
    case C5Orientation::DoublePrime:
      return {PatternKind::C5DoublePrime, 0, 0, nullptr, {}};
    case C5Orientation::TriplePrime:
      return {PatternKind::C5TriplePrime, 0, 0, nullptr, {}};
    }
    throw ParameterError("unknown pentagon orientation");
  }
  static auto from_digraph(Digraph d, std::string label = "custom") -> PatternId {
    if (d.vertex_count() > kMaxPatternOrder)
      throw SizeError("custom pattern has " + std::to_string(d.vertex_count()) + " vertices; limit is " +
                      std::to_string(kMaxPatternOrder));
    PatternId p{PatternKind::Custom, 0, 0, nullptr, {}};
    p.custom = std::make_shared<const Digraph>(std::move(d));
    p.label = std::move(label);
    return p;
  }

private:
  static auto checked(PatternId p) -> PatternId {
    if (p.r < 1 || (p.kind == PatternKind::TransitiveBlowup && p.t < 1))
      throw ParameterError("pattern parameters must be positive");
    if (p.kind == PatternKind::DirectedCycle && p.r < 2)
      throw ParameterError("directed cycle length must be >= 2");
    return p;
  }
};

inline auto to_string(const PatternId &p) -> std::string {
  switch (p.kind) {
  case PatternKind::TransitiveTournament:
    return "T" + std::to_string(p.r);
  case PatternKind::TransitiveBlowup:
    return "T" + std::to_string(p.r) + "x" + std::to_string(p.t);
  case PatternKind::DirectedCycle:
    return "Ck" + std::to_string(p.r);
  case PatternKind::C5Arrow:
    return "C5arrow";
  case PatternKind::C5Prime:
    return "C5'";
  case PatternKind::C5DoublePrime:
    return "C5''";
  case PatternKind::C5TriplePrime:
    return "C5'''";
  case PatternKind::Custom:
    return "custom:" + p.label;
  }
  return "?";
}

/// Identifier-safe short name, e.g. "t4", "ck3", "c5pp".
inline auto slug(const PatternId &p) -> std::string {
  switch (p.kind) {
  case PatternKind::C5Arrow:
    return "c5arrow";
  case PatternKind::C5Prime:
    return "c5p";
  case PatternKind::C5DoublePrime:
    return "c5pp";
  case PatternKind::C5TriplePrime:
    return "c5ppp";
  case PatternKind::Custom:
    return "custom";
  default: {
    auto s = to_string(p);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
  }
  }
}

/// Parses "T3", "T4x2", "Ck5", "C5arrow", "C5'", "C5''", "C5'''", "custom:<path>",
/// and the lowercase slugs ("t3", "ck5", "c5p", ...).
inline auto parse_pattern_id(const std::string &raw) -> PatternId {
  std::string text = raw;
  if (raw == "c5arrow")
    text = "C5arrow";
  else if (raw == "c5p" || raw == "c5pp" || raw == "c5ppp")
    text = "C5" + std::string(raw.size() - 2, '\'');
  else if (raw.rfind("ck", 0) == 0)
    text = "Ck" + raw.substr(2);
  else if (!raw.empty() && raw.front() == 't')
    text = "T" + raw.substr(1);
  auto number = [&](const std::string &s) -> int {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }) ||
        s.size() > 6)
      throw ParameterError("malformed pattern id '" + text + "'");
    return std::stoi(s);
  };
  if (text == "C5'")
    return PatternId::c5(C5Orientation::Prime);
  if (text == "C5''")
    return PatternId::c5(C5Orientation::DoublePrime);
  if (text == "C5'''")
    return PatternId::c5(C5Orientation::TriplePrime);
  if (text == "C5arrow")
    return PatternId::c5(C5Orientation::Arrow);
  if (text.rfind("custom:", 0) == 0) {
    const auto path = text.substr(7);
    return PatternId::from_digraph(read_digraph_file(path), path);
  }
  if (text.rfind("Ck", 0) == 0)
    return PatternId::directed_cycle(number(text.substr(2)));
  if (!text.empty() && text.front() == 'T') {
    const auto x = text.find('x');
    if (x == std::string::npos)
      return PatternId::transitive(number(text.substr(1)));
    return PatternId::transitive_blowup(number(text.substr(1, x - 1)), number(text.substr(x + 1)));
  }
  throw ParameterError("unknown pattern id '" + text + "'");
}

inline auto pattern_digraph(const PatternId &p) -> Digraph {
  switch (p.kind) {
  case PatternKind::TransitiveTournament:
    return transitive_tournament(p.r);
  case PatternKind::TransitiveBlowup:
    return tr_blowup(p.r, p.t);
  case PatternKind::DirectedCycle:
    return directed_cycle(p.r);
  case PatternKind::C5Arrow:
    return c5_pattern(C5Orientation::Arrow);
  case PatternKind::C5Prime:
    return c5_pattern(C5Orientation::Prime);
  case PatternKind::C5DoublePrime:
    return c5_pattern(C5Orientation::DoublePrime);
  case PatternKind::C5TriplePrime:
    return c5_pattern(C5Orientation::TriplePrime);
  case PatternKind::Custom:
    return *p.custom;
  }
  throw ParameterError("unknown pattern kind");
}

// ---------------------------------------------------------------------------
// Transitive tournaments: depth-first over dominance chains.

namespace detail {

struct ChainSearch {
  const Digraph &d;
  int r;
  const VertexSet *required;
  std::vector<int> chain;

  auto run(const VertexSet &candidates) -> bool {
    if (static_cast<int>(chain.size()) == r) {
      if (required == nullptr)
        return true;
      VertexSet in_chain(d.vertex_count());
      for (int c : chain)
        in_chain.insert(c);
      return (*required - in_chain).empty();
    }
    if (candidates.size() < r - static_cast<int>(chain.size()))
      return false;
    if (required != nullptr) {
      VertexSet covered = candidates;
      for (int c : chain)
        covered.insert(c);
      if (!(*required - covered).empty())
        return false;
    }
    auto order = candidates.to_vector();
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return d.out_degree(a) > d.out_degree(b); });
    for (int v : order) {
      chain.push_back(v);
      if (run(candidates & d.out(v)))
        return true;
      chain.pop_back();
    }
    return false;
  }
};

} // namespace detail

/// Finds v_1..v_r with v_i -> v_j for all i < j that includes every vertex of
/// `required` (when given); absence is exhaustive.
inline auto find_transitive_tournament(const Digraph &d, int r, const VertexSet *required = nullptr)
    -> std::optional<Embedding> {
  if (r < 1)
    throw ParameterError("transitive tournament needs r >= 1");
  detail::ChainSearch search{d, r, required, {}};
  if (!search.run(VertexSet::full(d.vertex_count())))
    return std::nullopt;
  return Embedding{r, search.chain};
}

inline auto contains_transitive_tournament(const Digraph &d, int r) -> std::optional<Embedding> {
  return find_transitive_tournament(d, r);
}

// ---------------------------------------------------------------------------
// Generic subgraph (not induced) containment.

namespace detail {

// Greedy most-constrained-first: start from the highest-degree vertex, then
// repeatedly take the vertex with most already-ordered neighbours.
inline auto pattern_order(const Digraph &p) -> std::vector<int> {
  const int n = p.vertex_count();
  const Graph g = underlying_graph(p);
  std::vector<int> order;
  VertexSet placed(n);
  while (static_cast<int>(order.size()) < n) {
    int best = -1, best_links = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (placed.contains(v))
        continue;
      const int links = g.neighbours(v).intersection_size(placed);
      const int deg = g.degree(v);
      if (links > best_links || (links == best_links && deg > best_deg)) {
        best = v;
        best_links = links;
        best_deg = deg;
      }
    }
    order.push_back(best);
    placed.insert(best);
  }
  return order;
}

struct MonomorphismSearch {
  const Digraph &host;
  const Digraph &pattern;
  std::vector<int> order;
  std::vector<VertexSet> degree_ok;
  std::vector<int> map;
  VertexSet used;

  MonomorphismSearch(const Digraph &h, const Digraph &p)
      : host(h), pattern(p), order(pattern_order(p)), map(static_cast<std::size_t>(p.vertex_count()), -1),
        used(h.vertex_count()) {
    for (int pv = 0; pv < p.vertex_count(); ++pv) {
      VertexSet ok(h.vertex_count());
      for (int hv = 0; hv < h.vertex_count(); ++hv)
        if (h.out_degree(hv) >= p.out_degree(pv) && h.in_degree(hv) >= p.in_degree(pv))
          ok.insert(hv);
      degree_ok.push_back(std::move(ok));
    }
  }

  auto run(std::size_t depth) -> bool {
    if (depth == order.size())
      return true;
    const int pv = order[depth];
    VertexSet cand = degree_ok[static_cast<std::size_t>(pv)] - used;
    for (std::size_t i = 0; i < depth && !cand.empty(); ++i) {
      const int q = order[i];
      const int hq = map[static_cast<std::size_t>(q)];
      if (pattern.has_arc(q, pv))
        cand &= host.out(hq);
      if (pattern.has_arc(pv, q))
        cand &= host.in(hq);
    }
    bool found = false;
    cand.for_each([&](int hv) {
      if (found)
        return;
      map[static_cast<std::size_t>(pv)] = hv;
      used.insert(hv);
      if (run(depth + 1))
        found = true;
      else
        used.erase(hv);
    });
    return found;
  }
};

} // namespace detail

/// Subgraph monomorphism without a size cap; callers bound the pattern size.
inline auto find_embedding(const Digraph &host, const Digraph &pattern) -> std::optional<Embedding> {
  if (pattern.vertex_count() > host.vertex_count())
    return std::nullopt;
  detail::MonomorphismSearch search(host, pattern);
  if (!search.run(0))
    return std::nullopt;
  return Embedding{pattern.vertex_count(), search.map};
}

inline auto contains_pattern(const Digraph &d, const PatternId &p) -> std::optional<Embedding> {
  if (p.kind == PatternKind::TransitiveTournament)
    return contains_transitive_tournament(d, p.r);
  const Digraph pattern = pattern_digraph(p);
  if (pattern.vertex_count() > kMaxPatternOrder)
    throw SizeError("pattern " + to_string(p) + " exceeds " + std::to_string(kMaxPatternOrder) + " vertices");
  return find_embedding(d, pattern);
}

// ---------------------------------------------------------------------------
// Odd girth of the underlying graph.

struct OddGirthResult {
  std::optional<int> value; ///< empty means infinite (bipartite)
  std::vector<int> witness; ///< cycle vertices in order, present iff value
};

inline auto odd_girth(const Graph &g) -> OddGirthResult {
  const int n = g.vertex_count();
  OddGirthResult best;
  std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(s)] = 0;
    parent[static_cast<std::size_t>(s)] = -1;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      const int du = dist[static_cast<std::size_t>(u)];
      if (best.value && 2 * du + 1 >= *best.value)
        break;
      bool closed = false;
      g.neighbours(u).for_each([&](int w) {
        if (closed)
          return;
        auto &dw = dist[static_cast<std::size_t>(w)];
        if (dw < 0) {
          dw = du + 1;
          parent[static_cast<std::size_t>(w)] = u;
          queue.push_back(w);
        } else if (dw == du && (!best.value || 2 * du + 1 < *best.value)) {
          // Two shortest paths to adjacent vertices at equal depth.
          std::vector<int> left, right;
          for (int x = u; x != -1; x = parent[static_cast<std::size_t>(x)])
            left.push_back(x);
          for (int x = w; x != -1; x = parent[static_cast<std::size_t>(x)])
            right.push_back(x);
          std::vector<int> cycle(left.rbegin(), left.rend());
          cycle.insert(cycle.end(), right.begin(), right.end() - 1);
          best.value = 2 * du + 1;
          best.witness = std::move(cycle);
          closed = true;
        }
      });
      if (closed)
        break;
    }
  }
  return best;
}

inline auto odd_girth(const Digraph &d) -> OddGirthResult { return odd_girth(underlying_graph(d)); }

/// True iff `cycle` is a closed walk of distinct vertices in g with odd length.
inline auto is_odd_cycle(const Graph &g, std::span<const int> cycle) -> bool {
  if (cycle.size() < 3 || cycle.size() % 2 == 0)
    return false;
  VertexSet seen(g.vertex_count());
  for (int v : cycle) {
    if (v < 0 || v >= g.vertex_count() || seen.contains(v))
      return false;
    seen.insert(v);
  }
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (!g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()]))
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// Oriented paths into directed paths.

enum class Step { Forward, Backward };

struct PathHomomorphism {
  int t = 0;               ///< length of the target directed path, in vertices
  std::vector<int> levels; ///< image of each path vertex in 0..t-1
};

/// Maps the oriented path with the given arc directions onto the shortest
/// directed path P_t: forward arcs climb one level, backward arcs descend one.
inline auto path_homomorphism_to_directed_path(std::span<const Step> steps) -> PathHomomorphism {
  if (steps.empty())
    throw SizeError("oriented path needs at least two vertices");
  PathHomomorphism h;
  h.levels.push_back(0);
  for (Step s : steps)
    h.levels.push_back(h.levels.back() + (s == Step::Forward ? 1 : -1));
  const int lo = *std::min_element(h.levels.begin(), h.levels.end());
  for (auto &l : h.levels)
    l -= lo;
  h.t = *std::max_element(h.levels.begin(), h.levels.end()) + 1;
  return h;
}

// ---------------------------------------------------------------------------
// Homomorphisms into small targets.

inline constexpr int kMaxHomomorphismTarget = 6;

namespace detail {

struct HomSearch {
  const Digraph &d;
  const Digraph &h;
  std::vector<int> order;
  std::vector<int> map;
  std::vector<std::uint64_t> h_out, h_in;

  auto run(std::size_t depth, std::vector<std::uint64_t> &domains) -> bool {
    if (depth == order.size())
      return true;
    const int u = order[depth];
    std::uint64_t choices = domains[static_cast<std::size_t>(u)];
    while (choices != 0) {
      const int img = std::countr_zero(choices);
      choices &= choices - 1;
      // Forward checking: arcs of D restrict the neighbours' domains.
      auto next = domains;
      next[static_cast<std::size_t>(u)] = std::uint64_t{1} << img;
      bool wiped = false;
      d.out(u).for_each([&](int w) {
        auto &dom = next[static_cast<std::size_t>(w)];
        dom &= h_out[static_cast<std::size_t>(img)];
        wiped = wiped || dom == 0;
      });
      d.in(u).for_each([&](int w) {
        auto &dom = next[static_cast<std::size_t>(w)];
        dom &= h_in[static_cast<std::size_t>(img)];
        wiped = wiped || dom == 0;
      });
      if (wiped)
        continue;
      map[static_cast<std::size_t>(u)] = img;
      if (run(depth + 1, next))
        return true;
    }
    return false;
  }
};

} // namespace detail

/// Arc-preserving map D -> H, or nullopt when none exists.
inline auto has_homomorphism(const Digraph &d, const Digraph &h) -> std::optional<std::vector<int>> {
  if (h.vertex_count() > kMaxHomomorphismTarget)
    throw SizeError("homomorphism target limited to " + std::to_string(kMaxHomomorphismTarget) + " vertices");
  const int n = d.vertex_count();
  if (n == 0)
    return std::vector<int>{};
  if (h.vertex_count() == 0)
    return std::nullopt;
  detail::HomSearch search{d, h, {}, std::vector<int>(static_cast<std::size_t>(n), -1), {}, {}};
  for (int x = 0; x < h.vertex_count(); ++x) {
    search.h_out.push_back(h.out(x).data()[0]);
    search.h_in.push_back(h.in(x).data()[0]);
  }
  // Breadth-first order keeps every assigned vertex next to earlier ones.
  const Graph g = underlying_graph(d);
  VertexSet seen(n);
  for (int root = 0; root < n; ++root) {
    if (seen.contains(root))
      continue;
    std::deque<int> queue{root};
    seen.insert(root);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      search.order.push_back(u);
      (g.neighbours(u) - seen).for_each([&](int w) {
        seen.insert(w);
        queue.push_back(w);
      });
    }
  }
  const std::uint64_t all = (std::uint64_t{1} << h.vertex_count()) - 1;
  std::vector<std::uint64_t> domains(static_cast<std::size_t>(n), all);
  if (!search.run(0, domains))
    return std::nullopt;
  return search.map;
}

// ---------------------------------------------------------------------------
// Pentagon orientations.

/// Classifies an orientation of C5 by the multiset of its maximal directed
/// runs: {5} arrow, {4,1} prime, {3,2} double prime, {2,1,1,1} triple prime.
inline auto classify_c5_orientation(const Digraph &c) -> PatternKind {
  if (c.vertex_count() != 5 || c.arc_count() != 5)
    throw ShapeError("not an oriented 5-cycle: need 5 vertices and 5 arcs");
  const Graph g = underlying_graph(c);
  for (int v = 0; v < 5; ++v)
    if (g.degree(v) != 2)
      throw ShapeError("not an oriented 5-cycle: vertex " + std::to_string(v) + " has degree " +
                       std::to_string(g.degree(v)));
  std::vector<int> walk{0};
  int prev = -1, cur = 0;
  for (int i = 0; i < 4; ++i) {
    int next = -1;
    g.neighbours(cur).for_each([&](int w) {
      if (w != prev && next < 0)
        next = w;
    });
    prev = cur;
    cur = next;
    walk.push_back(cur);
  }
  if (VertexSet::full(5) != [&] {
        VertexSet s(5);
        for (int v : walk)
          s.insert(v);
        return s;
      }() ||
      !g.adjacent(walk.back(), walk.front()))
    throw ShapeError("not an oriented 5-cycle: underlying graph is not C5");
  std::array<bool, 5> fwd{};
  for (std::size_t i = 0; i < 5; ++i)
    fwd[i] = c.has_arc(walk[i], walk[(i + 1) % 5]);
  std::size_t start = 0;
  while (start < 5 && fwd[start] == fwd[(start + 4) % 5])
    ++start;
  if (start == 5)
    return PatternKind::C5Arrow;
  std::vector<int> runs;
  for (std::size_t i = 0; i < 5; ++i) {
    const std::size_t at = (start + i) % 5;
    if (i == 0 || fwd[at] != fwd[(at + 4) % 5])
      runs.push_back(0);
    ++runs.back();
  }
  std::sort(runs.rbegin(), runs.rend());
  if (runs == std::vector<int>{4, 1})
    return PatternKind::C5Prime;
  if (runs == std::vector<int>{3, 2})
    return PatternKind::C5DoublePrime;
  return PatternKind::C5TriplePrime;
}

} // namespace chromprof
