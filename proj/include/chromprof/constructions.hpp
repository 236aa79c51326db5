#pragma once

// Generators for every named digraph family. Vertex labelling conventions are
// part of each generator's contract so that tests and witness finders can
// address vertices by role.

#include "digraph.hpp"

#include <array>
#include <cstdint>
#include <numeric>
#include <string>

namespace chromprof {

/// T_r on 0..r-1 with arcs i -> j for all i < j.
inline auto transitive_tournament(int r) -> Digraph {
  if (r < 1)
    throw ParameterError("transitive tournament needs r >= 1");
  Digraph d(r);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      d.add_arc(i, j);
  return d;
}

/// T_r[t]: vertex i of T_r becomes the class i*t .. i*t+t-1.
inline auto tr_blowup(int r, int t) -> Digraph {
  if (t < 1)
    throw ParameterError("blowup factor t must be >= 1");
  const std::vector<int> sizes(static_cast<std::size_t>(r), t);
  return blowup_digraph(transitive_tournament(r), sizes);
}

/// Directed cycle 0 -> 1 -> ... -> k-1 -> 0.
inline auto directed_cycle(int k) -> Digraph {
  if (k < 2)
    throw ParameterError("directed cycle needs k >= 2");
  Digraph d(k);
  for (int i = 0; i < k; ++i)
    d.add_arc(i, (i + 1) % k);
  return d;
}

enum class C5Orientation { Arrow, Prime, DoublePrime, TriplePrime };

/// The four pentagon orientations, vertices A..E = 0..4 drawn as a pentagon
/// A, B, C, D, E. The Arrow and Prime shapes share the directed path
/// A -> E -> D -> C; they differ on the last two pentagon sides.
inline auto c5_pattern(C5Orientation which) -> Digraph {
  constexpr int A = 0, B = 1, C = 2, D = 3, E = 4;
  switch (which) {
  case C5Orientation::Arrow:
    return make_digraph(5, {{A, E}, {E, D}, {D, C}, {C, B}, {B, A}});
  case C5Orientation::Prime:
    return make_digraph(5, {{A, E}, {E, D}, {D, C}, {C, B}, {A, B}});
  case C5Orientation::DoublePrime:
    return make_digraph(5, {{A, E}, {E, D}, {D, C}, {B, C}, {A, B}});
  case C5Orientation::TriplePrime:
    return make_digraph(5, {{A, E}, {E, D}, {C, D}, {C, B}, {A, B}});
  }
  throw ParameterError("unknown pentagon orientation");
}

/// A_n: vertex 0 is the apex dominating everything; vertices
/// 1..floor((n-1)/2) form side L, the remaining ceil((n-1)/2) side R, with
/// both arcs between every L-R pair.
inline auto a_n(int n) -> Digraph {
  if (n < 3)
    throw ParameterError("A_n needs n >= 3");
  const int left = (n - 1) / 2;
  Digraph d(n);
  for (int v = 1; v < n; ++v)
    d.add_arc(0, v);
  for (int a = 1; a <= left; ++a)
    for (int b = left + 1; b < n; ++b) {
      d.add_arc(a, b);
      d.add_arc(b, a);
    }
  return d;
}

struct BnLayout {
  int x_size, y_size, z_size;
  auto x_begin() const -> int { return 2; }
  auto y_begin() const -> int { return 2 + x_size; }
  auto z_begin() const -> int { return 2 + x_size + y_size; }
};

inline auto b_n_layout(int n) -> BnLayout {
  if (n < 5)
    throw ParameterError("B_n needs n >= 5");
  const int x = (n - 2 + 2) / 3;
  const int y = (n - 2) / 3;
  return {x, y, n - 2 - x - y};
}

/// B_n: 0 = u, 1 = v, then the X, Y, Z blocks in that order (see b_n_layout).
/// Arcs: u -> v, {u,v} -> X, X -> Y, and both directions between Y and Z.
inline auto b_n(int n) -> Digraph {
  const auto lay = b_n_layout(n);
  Digraph d(n);
  d.add_arc(0, 1);
  for (int x = lay.x_begin(); x < lay.y_begin(); ++x) {
    d.add_arc(0, x);
    d.add_arc(1, x);
    for (int y = lay.y_begin(); y < lay.z_begin(); ++y)
      d.add_arc(x, y);
  }
  for (int y = lay.y_begin(); y < lay.z_begin(); ++y)
    for (int z = lay.z_begin(); z < n; ++z) {
      d.add_arc(y, z);
      d.add_arc(z, y);
    }
  return d;
}

inline auto c3_blowup_sizes(int n) -> std::array<int, 3> {
  if (n < 3)
    throw ParameterError("C3 blowup needs n >= 3");
  const int n1 = (n + 2) / 3;
  const int n2 = n / 3;
  return {n1, n2, n - n1 - n2};
}

/// C3[n1, n2, n3]: classes laid out in order, class i dominates class i+1 mod 3.
inline auto c3_blowup_n(int n) -> Digraph {
  const auto sizes = c3_blowup_sizes(n);
  return blowup_digraph(directed_cycle(3), sizes);
}

/// The modulus n must be divisible by for the exact AES construction.
constexpr auto aes_modulus(int r) -> int { return r == 3 ? 5 : 3 * r - 4; }

namespace detail {

inline auto aes_graph(int r, int c5_class, std::span<const int> k_classes) -> Graph {
  const std::vector<int> ring(5, c5_class);
  Graph g = blowup(cycle_graph(5), ring);
  if (r == 3)
    return g;
  return join(g, blowup(complete_graph(r - 3), k_classes));
}

} // namespace detail

/// Double orientation of C5[n/(3r-4)] v K_{r-3}[3n/(3r-4)] (C5[n/5] for r = 3).
/// The five pentagon classes come first (class i at i*s .. i*s+s-1), then the
/// r-3 classes of the complete part.
inline auto extremal_aes(int n, int r) -> Digraph {
  if (r < 3)
    throw ParameterError("AES construction needs r >= 3");
  const int m = aes_modulus(r);
  if (n <= 0 || n % m != 0)
    throw ParameterError("AES construction with r = " + std::to_string(r) + " needs n divisible by " +
                         std::to_string(m));
  const int s = n / m;
  const std::vector<int> k_classes(static_cast<std::size_t>(r - 3), 3 * s);
  return double_orientation(detail::aes_graph(r, s, k_classes));
}

/// Floor-rounded AES construction for arbitrary n >= 3r-4. Leftover vertices
/// are added one each to the pentagon classes first, then to the complete
/// part. Carries no exact degree guarantee.
inline auto extremal_aes_relaxed(int n, int r) -> Digraph {
  if (r < 3)
    throw ParameterError("AES construction needs r >= 3");
  const int m = aes_modulus(r);
  if (n < m)
    throw ParameterError("relaxed AES construction needs n >= " + std::to_string(m));
  const int s = n / m;
  std::vector<int> ring(5, s);
  std::vector<int> k_classes(static_cast<std::size_t>(r - 3), 3 * s);
  int left = n - 5 * s - 3 * s * (r - 3);
  for (std::size_t i = 0; left > 0; i = (i + 1) % (5 + k_classes.size()), --left) {
    if (i < 5)
      ++ring[i];
    else
      ++k_classes[i - 5];
  }
  Graph g = blowup(cycle_graph(5), ring);
  if (r > 3)
    g = join(g, blowup(complete_graph(r - 3), k_classes));
  return double_orientation(g);
}

/// Role assignment for a 5-wheel-like digraph.
struct WheelLayout {
  int v = 0, w1 = 1, w2 = 2;
  std::vector<int> q1, q2; ///< each in transitive order (source first)
};

/// W_{r,t} on 2(r-2)-t+3 vertices: 0 = v, 1 = w1, 2 = w2, then the t shared
/// vertices, then Q1-only, then Q2-only. Each Q_i is ordered by id; v
/// dominates both Q_i, Q_i dominates w_i, and w1 -> w2.
inline auto wheel_like_layout(int r, int t) -> WheelLayout {
  if (r < 3)
    throw ParameterError("wheel-like digraph needs r >= 3");
  if (t < 0 || t > r - 2)
    throw ParameterError("overlap t must lie in 0..r-2");
  WheelLayout lay;
  const int shared_begin = 3;
  const int own = r - 2 - t;
  for (int i = 0; i < t; ++i) {
    lay.q1.push_back(shared_begin + i);
    lay.q2.push_back(shared_begin + i);
  }
  for (int i = 0; i < own; ++i) {
    lay.q1.push_back(shared_begin + t + i);
    lay.q2.push_back(shared_begin + t + own + i);
  }
  return lay;
}

inline auto wheel_like(int r, int t) -> Digraph {
  const auto lay = wheel_like_layout(r, t);
  Digraph d(2 * (r - 2) - t + 3);
  for (const auto *q : {&lay.q1, &lay.q2}) {
    for (std::size_t i = 0; i < q->size(); ++i)
      for (std::size_t j = i + 1; j < q->size(); ++j)
        d.add_arc((*q)[i], (*q)[j]);
    for (int x : *q)
      d.add_arc(lay.v, x);
  }
  for (int x : lay.q1)
    d.add_arc(x, lay.w1);
  for (int x : lay.q2)
    d.add_arc(x, lay.w2);
  d.add_arc(lay.w1, lay.w2);
  return d;
}

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

struct RemarkLayout {
  int a_size, b_size, c_size;
};

/// Part sizes (1/5 - 2e)n, (2/5 + e)n, (2/5 + e)n, computed exactly.
inline auto remark_layout(int n, Rational eps) -> RemarkLayout {
  if (eps.den <= 0)
    throw ParameterError("epsilon denominator must be positive");
  const std::int64_t den = 5 * eps.den;
  const std::int64_t a_num = std::int64_t(n) * (eps.den - 10 * eps.num);
  const std::int64_t b_num = std::int64_t(n) * (2 * eps.den + 5 * eps.num);
  if (a_num % den != 0 || b_num % den != 0)
    throw ParameterError("part sizes (1/5-2e)n and (2/5+e)n must be integers");
  const auto a = a_num / den;
  const auto b = b_num / den;
  if (a <= 0 || b <= 0)
    throw ParameterError("part sizes must be positive");
  return {static_cast<int>(a), static_cast<int>(b), static_cast<int>(b)};
}

/// Vertices: A block, then B, then C. Arcs A -> B u C and both directions
/// between B and C.
inline auto remark_construction(int n, Rational eps) -> Digraph {
  const auto lay = remark_layout(n, eps);
  Digraph d(n);
  const int b0 = lay.a_size, c0 = lay.a_size + lay.b_size;
  for (int a = 0; a < b0; ++a)
    for (int x = b0; x < n; ++x)
      d.add_arc(a, x);
  for (int b = b0; b < c0; ++b)
    for (int c = c0; c < n; ++c) {
      d.add_arc(b, c);
      d.add_arc(c, b);
    }
  return d;
}

} // namespace chromprof
