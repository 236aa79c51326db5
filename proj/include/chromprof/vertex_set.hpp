#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace chromprof {

/**
 * Bit-packed subset of {0, ..., universe-1}, one 64-bit word per 64 vertices.
 *
 * Universes of at most 64 vertices live in a single inline word, which keeps
 * the small digraphs produced during exhaustive enumeration allocation-free.
 */
class VertexSet {
public:
  VertexSet() = default;

  explicit VertexSet(int universe) : universe_(universe) {
    if (universe_ > 64)
      heap_.assign(word_count(), 0);
  }

  static auto full(int universe) -> VertexSet {
    VertexSet s(universe);
    for (int w = 0; w < s.word_count(); ++w)
      s.data()[w] = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  static auto of(int universe, std::initializer_list<int> vs) -> VertexSet {
    VertexSet s(universe);
    for (int v : vs)
      s.insert(v);
    return s;
  }

  auto universe() const -> int { return universe_; }
  auto word_count() const -> int { return (universe_ + 63) / 64; }

  auto insert(int v) -> void { data()[v >> 6] |= bit(v); }
  auto erase(int v) -> void { data()[v >> 6] &= ~bit(v); }
  auto contains(int v) const -> bool { return (data()[v >> 6] & bit(v)) != 0; }

  auto size() const -> int {
    int c = 0;
    for (int w = 0; w < word_count(); ++w)
      c += std::popcount(data()[w]);
    return c;
  }

  auto empty() const -> bool {
    for (int w = 0; w < word_count(); ++w)
      if (data()[w] != 0)
        return false;
    return true;
  }

  /// Lowest member, or -1 when empty.
  auto first() const -> int {
    for (int w = 0; w < word_count(); ++w)
      if (data()[w] != 0)
        return w * 64 + std::countr_zero(data()[w]);
    return -1;
  }

  auto operator&=(const VertexSet &o) -> VertexSet & {
    for (int w = 0; w < word_count(); ++w)
      data()[w] &= o.data()[w];
    return *this;
  }

  auto operator|=(const VertexSet &o) -> VertexSet & {
    for (int w = 0; w < word_count(); ++w)
      data()[w] |= o.data()[w];
    return *this;
  }

  /// Set difference.
  auto operator-=(const VertexSet &o) -> VertexSet & {
    for (int w = 0; w < word_count(); ++w)
      data()[w] &= ~o.data()[w];
    return *this;
  }

  friend auto operator&(VertexSet a, const VertexSet &b) -> VertexSet { return a &= b; }
  friend auto operator|(VertexSet a, const VertexSet &b) -> VertexSet { return a |= b; }
  friend auto operator-(VertexSet a, const VertexSet &b) -> VertexSet { return a -= b; }

  auto complement() const -> VertexSet { return full(universe_) - *this; }

  auto intersection_size(const VertexSet &o) const -> int {
    int c = 0;
    for (int w = 0; w < word_count(); ++w)
      c += std::popcount(data()[w] & o.data()[w]);
    return c;
  }

  friend auto operator==(const VertexSet &a, const VertexSet &b) -> bool {
    if (a.universe_ != b.universe_)
      return false;
    for (int w = 0; w < a.word_count(); ++w)
      if (a.data()[w] != b.data()[w])
        return false;
    return true;
  }

  /// Calls f(v) for every member in increasing order.
  template <class F> auto for_each(F &&f) const -> void {
    for (int w = 0; w < word_count(); ++w) {
      std::uint64_t bits = data()[w];
      while (bits != 0) {
        f(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

  auto to_vector() const -> std::vector<int> {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  auto data() -> std::uint64_t * { return universe_ <= 64 ? &small_ : heap_.data(); }
  auto data() const -> const std::uint64_t * { return universe_ <= 64 ? &small_ : heap_.data(); }

private:
  static auto bit(int v) -> std::uint64_t { return std::uint64_t{1} << (v & 63); }

  auto trim() -> void {
    if (universe_ % 64 != 0 && universe_ > 0)
      data()[word_count() - 1] &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  int universe_ = 0;
  std::uint64_t small_ = 0;
  std::vector<std::uint64_t> heap_;
};

} // namespace chromprof
