#pragma once

// Exhaustive and sampled scans over small digraphs. A labelled digraph on n
// vertices is a base-4 code with one digit per pair i < j (pairs in
// lexicographic order, digit p at bits 2p..2p+1): 0 none, 1 i -> j,
// 2 j -> i, 3 both.

#include "coloring.hpp"
#include "patterns.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace chromprof {

inline constexpr int kMaxEnumerationOrder = 5;
inline constexpr int kMaxHillclimbOrder = 32;

using DigraphCode = std::uint64_t;

constexpr auto pair_count(int n) -> int { return n * (n - 1) / 2; }

inline auto labelled_count(int n) -> DigraphCode {
  if (n < 0 || n > kMaxEnumerationOrder)
    throw SizeError("exhaustive enumeration is limited to n <= " + std::to_string(kMaxEnumerationOrder) +
                    "; use random mode for larger n");
  return DigraphCode{1} << (2 * pair_count(n));
}

inline auto decode_digraph(int n, DigraphCode code) -> Digraph {
  Digraph d(n);
  int p = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++p) {
      const auto s = (code >> (2 * p)) & 3;
      if (s & 1)
        d.add_arc(i, j);
      if (s & 2)
        d.add_arc(j, i);
    }
  return d;
}

inline auto encode_digraph(const Digraph &d) -> DigraphCode {
  const int n = d.vertex_count();
  if (pair_count(n) > 32)
    throw SizeError("pair codes fit digraphs with n <= 8");
  DigraphCode code = 0;
  int p = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++p) {
      DigraphCode s = (d.has_arc(i, j) ? 1 : 0) | (d.has_arc(j, i) ? 2 : 0);
      code |= s << (2 * p);
    }
  return code;
}

/// Minimum out-degree read straight off the code.
inline auto code_min_out_degree(int n, DigraphCode code) -> int {
  std::array<int, kMaxEnumerationOrder> out{};
  int p = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++p) {
      const auto s = (code >> (2 * p)) & 3;
      out[static_cast<std::size_t>(i)] += static_cast<int>(s & 1);
      out[static_cast<std::size_t>(j)] += static_cast<int>(s >> 1);
    }
  return n == 0 ? 0 : *std::min_element(out.begin(), out.begin() + n);
}

namespace detail {

// Per-permutation tables mapping each 5-pair block of a code to its image.
class CodePermuter {
public:
  explicit CodePermuter(int n) : n_(n), pairs_(pair_count(n)) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::array<int, 2>> pair_of;
    std::vector<std::vector<int>> index(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<int>(pair_of.size());
        pair_of.push_back({i, j});
      }
    blocks_ = (pairs_ + kBlock - 1) / kBlock;
    do {
      auto &t = tables_.emplace_back(static_cast<std::size_t>(blocks_) * kTable, 0);
      for (int b = 0; b < blocks_; ++b)
        for (std::uint32_t bits = 0; bits < kTable; ++bits) {
          DigraphCode image = 0;
          for (int k = 0; k < kBlock; ++k) {
            const int p = b * kBlock + k;
            const auto s = (bits >> (2 * k)) & 3;
            if (p >= pairs_ || s == 0)
              continue;
            int a = perm[static_cast<std::size_t>(pair_of[static_cast<std::size_t>(p)][0])];
            int c = perm[static_cast<std::size_t>(pair_of[static_cast<std::size_t>(p)][1])];
            DigraphCode img = s;
            if (a > c) {
              std::swap(a, c);
              img = ((s & 1) << 1) | (s >> 1);
            }
            image |= img << (2 * index[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)]);
          }
          t[static_cast<std::size_t>(b) * kTable + bits] = image;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  auto is_canonical(DigraphCode code) const -> bool {
    for (const auto &t : tables_) {
      DigraphCode image = 0;
      for (int b = 0; b < blocks_; ++b)
        image |= t[static_cast<std::size_t>(b) * kTable + ((code >> (2 * kBlock * b)) & (kTable - 1))];
      if (image < code)
        return false;
    }
    return true;
  }

private:
  static constexpr int kBlock = 5;
  static constexpr std::uint32_t kTable = 1u << (2 * kBlock);
  int n_;
  int pairs_;
  int blocks_ = 0;
  std::vector<std::vector<DigraphCode>> tables_;
};

inline auto splitmix64(std::uint64_t x) -> std::uint64_t {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline constexpr std::uint64_t kChunk = 1 << 12;

// Splits [0, total) into fixed chunks, runs them on `workers` threads, and
// folds the per-chunk results in chunk order so the outcome never depends on
// scheduling.
template <class Acc, class Work, class Merge>
auto sharded_reduce(std::uint64_t total, int workers, Work work, Merge merge) -> Acc {
  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
  std::vector<Acc> parts(static_cast<std::size_t>(chunks));
  std::atomic<std::uint64_t> next{0};
  auto run = [&] {
    for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;)
      parts[static_cast<std::size_t>(c)] = work(c * kChunk, std::min(total, (c + 1) * kChunk));
  };
  const int threads = static_cast<int>(std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(workers, 1)), 1, std::max<std::uint64_t>(chunks, 1)));
  std::vector<std::jthread> pool;
  for (int i = 1; i < threads; ++i)
    pool.emplace_back(run);
  run();
  pool.clear();
  Acc acc{};
  for (auto &p : parts)
    merge(acc, std::move(p));
  return acc;
}

} // namespace detail

/// Calls f(code, digraph) for every labelled digraph on n vertices, or one
/// per isomorphism class (the minimum code) with canonical_only.
template <class F>
auto for_each_digraph(int n, bool canonical_only, F &&f) -> void {
  const DigraphCode total = labelled_count(n);
  std::optional<detail::CodePermuter> perm;
  if (canonical_only)
    perm.emplace(n);
  for (DigraphCode code = 0; code < total; ++code)
    if (!perm || perm->is_canonical(code))
      f(code, decode_digraph(n, code));
}

inline auto enumerate_digraphs(int n, bool canonical_only) -> std::vector<Digraph> {
  std::vector<Digraph> out;
  for_each_digraph(n, canonical_only, [&](DigraphCode, Digraph d) { out.push_back(std::move(d)); });
  return out;
}

inline auto count_digraphs(int n, bool canonical_only) -> std::uint64_t {
  if (!canonical_only)
    return labelled_count(n);
  const detail::CodePermuter perm(n);
  std::uint64_t count = 0;
  for (DigraphCode code = 0; code < labelled_count(n); ++code)
    count += perm.is_canonical(code) ? 1 : 0;
  return count;
}

// ---------------------------------------------------------------------------
// Empirical profile.

enum class SearchMode { Exhaustive, Random, Hillclimb };

inline auto to_string(SearchMode m) -> std::string {
  switch (m) {
  case SearchMode::Exhaustive:
    return "exhaustive";
  case SearchMode::Random:
    return "random";
  case SearchMode::Hillclimb:
    return "hillclimb";
  }
  return "?";
}

struct SearchConfig {
  SearchMode mode = SearchMode::Exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0; ///< random samples or hill-climb iterations
  int workers = 1;
};

struct ScanCounts {
  std::uint64_t scanned = 0;
  std::uint64_t pattern_free = 0;
  std::uint64_t non_colorable = 0;
};

struct ThresholdReport {
  PatternId pattern;
  int k = 0;
  int n = 0;
  SearchConfig config;
  std::optional<int> best_delta_plus;
  std::optional<Digraph> certificate;
  ScanCounts counts;
};

namespace detail {

struct ProfileAcc {
  ScanCounts counts;
  int best = -1;
  DigraphCode best_code = 0;
  std::optional<Digraph> best_digraph;

  auto offer(int delta, DigraphCode code, const Digraph &d) -> void {
    if (delta > best || (delta == best && code < best_code)) {
      best = delta;
      best_code = code;
      best_digraph = d;
    }
  }
};

inline auto merge_profile(ProfileAcc &acc, ProfileAcc part) -> void {
  acc.counts.scanned += part.counts.scanned;
  acc.counts.pattern_free += part.counts.pattern_free;
  acc.counts.non_colorable += part.counts.non_colorable;
  if (part.best_digraph)
    acc.offer(part.best, part.best_code, *part.best_digraph);
}

inline auto profile_step(ProfileAcc &acc, const Digraph &d, DigraphCode code, const PatternId &pattern, int k)
    -> void {
  ++acc.counts.scanned;
  if (contains_pattern(d, pattern))
    return;
  ++acc.counts.pattern_free;
  if (is_k_colorable(d, k))
    return;
  ++acc.counts.non_colorable;
  acc.offer(d.vertex_count() == 0 ? 0 : min_out_degree(d), code, d);
}

inline auto random_digraph(int n, std::mt19937_64 &rng) -> Digraph {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double p = unit(rng);
  Digraph d(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && unit(rng) < p)
        d.add_arc(i, j);
  return d;
}

inline auto block_rng(std::uint64_t seed, std::uint64_t block) -> std::mt19937_64 {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(block)));
}

inline auto finish(ThresholdReport rep, const ProfileAcc &acc) -> ThresholdReport {
  rep.counts = acc.counts;
  if (acc.best_digraph) {
    const Digraph &c = *acc.best_digraph;
    if (contains_pattern(c, rep.pattern) || is_k_colorable(c, rep.k) ||
        (c.vertex_count() > 0 && min_out_degree(c) != acc.best))
      throw InvariantViolation("profile certificate failed re-verification");
    rep.best_delta_plus = acc.best;
    rep.certificate = c;
  }
  return rep;
}

} // namespace detail

/// Largest delta+ among pattern-free digraphs that are not k-colourable.
/// Exhaustive mode scans every labelled digraph, so the maximum is exact;
/// random mode samples config.trials digraphs.
inline auto empirical_profile(const PatternId &pattern, int k, int n, const SearchConfig &config)
    -> ThresholdReport {
  if (k < 1)
    throw ParameterError("colour bound k must be >= 1");
  ThresholdReport rep{pattern, k, n, config, {}, {}, {}};
  detail::ProfileAcc acc;
  auto merge = [](detail::ProfileAcc &a, detail::ProfileAcc p) { detail::merge_profile(a, std::move(p)); };
  switch (config.mode) {
  case SearchMode::Exhaustive: {
    const DigraphCode total = labelled_count(n);
    acc = detail::sharded_reduce<detail::ProfileAcc>(
        total, config.workers,
        [&](DigraphCode lo, DigraphCode hi) {
          detail::ProfileAcc part;
          for (DigraphCode code = lo; code < hi; ++code)
            detail::profile_step(part, decode_digraph(n, code), code, pattern, k);
          return part;
        },
        merge);
    break;
  }
  case SearchMode::Random: {
    if (n < 1 || n > 64)
      throw SizeError("random mode supports 1 <= n <= 64");
    acc = detail::sharded_reduce<detail::ProfileAcc>(
        config.trials, config.workers,
        [&](std::uint64_t lo, std::uint64_t hi) {
          detail::ProfileAcc part;
          auto rng = detail::block_rng(config.seed, lo / detail::kChunk);
          for (std::uint64_t i = lo; i < hi; ++i)
            detail::profile_step(part, detail::random_digraph(n, rng), i, pattern, k);
          return part;
        },
        merge);
    break;
  }
  case SearchMode::Hillclimb:
    throw ParameterError("use hillclimb_extremal for hill-climbing");
  }
  return detail::finish(std::move(rep), acc);
}

/// Local search over single pair-state changes, keeping the digraph
/// pattern-free and not k-colourable and never lowering delta+. Starts from
/// `start` when given, otherwise from random digraphs until one is feasible.
inline auto hillclimb_extremal(const PatternId &pattern, int k, int n, std::uint64_t seed, std::uint64_t iters,
                               const std::optional<Digraph> &start = std::nullopt) -> ThresholdReport {
  if (n < 2 || n > kMaxHillclimbOrder)
    throw SizeError("hill-climbing supports 2 <= n <= " + std::to_string(kMaxHillclimbOrder));
  if (start && start->vertex_count() != n)
    throw ParameterError("start digraph has the wrong order");
  ThresholdReport rep{pattern, k, n, {SearchMode::Hillclimb, seed, iters, 1}, {}, {}, {}};
  std::mt19937_64 rng(detail::splitmix64(seed));
  auto feasible = [&](const Digraph &d) {
    ++rep.counts.scanned;
    if (contains_pattern(d, pattern))
      return false;
    ++rep.counts.pattern_free;
    if (is_k_colorable(d, k))
      return false;
    ++rep.counts.non_colorable;
    return true;
  };
  std::optional<Digraph> cur;
  std::uint64_t it = 0;
  if (start && feasible(*start))
    cur = *start;
  for (; !cur && it < iters; ++it) {
    Digraph d = detail::random_digraph(n, rng);
    if (feasible(d))
      cur = std::move(d);
  }
  if (!cur)
    return rep;
  int delta = min_out_degree(*cur);
  Digraph best = *cur;
  int best_delta = delta;
  std::uniform_int_distribution<int> pick_vertex(0, n - 1), pick_state(0, 3);
  for (; it < iters; ++it) {
    int i = pick_vertex(rng), j = pick_vertex(rng);
    if (i == j)
      continue;
    if (i > j)
      std::swap(i, j);
    const int old_state = (cur->has_arc(i, j) ? 1 : 0) | (cur->has_arc(j, i) ? 2 : 0);
    int state = pick_state(rng);
    if (state == old_state)
      state = (state + 1) % 4;
    Digraph next = *cur;
    if (next.has_arc(i, j))
      next.remove_arc(i, j);
    if (next.has_arc(j, i))
      next.remove_arc(j, i);
    if (state & 1)
      next.add_arc(i, j);
    if (state & 2)
      next.add_arc(j, i);
    const int nd = min_out_degree(next);
    if (nd < delta || !feasible(next))
      continue;
    cur = std::move(next);
    delta = nd;
    if (delta > best_delta) {
      best_delta = delta;
      best = *cur;
    }
  }
  detail::ProfileAcc acc;
  acc.counts = rep.counts;
  acc.offer(best_delta, 0, best);
  return detail::finish(std::move(rep), acc);
}

// ---------------------------------------------------------------------------
// Theorem re-verification.

enum class TheoremKind { AES, DirectedOddCycle, PentagonBipartite };

struct TheoremId {
  TheoremKind kind = TheoremKind::AES;
  int param = 3;                                     ///< r for AES, cycle length otherwise
  PatternKind pentagon = PatternKind::C5Prime;       ///< forbidden orientation for PentagonBipartite

  static auto aes(int r) -> TheoremId { return {TheoremKind::AES, r, PatternKind::C5Prime}; }
  static auto directed_cycle(int len) -> TheoremId { return {TheoremKind::DirectedOddCycle, len, PatternKind::C5Prime}; }
  static auto pentagon_bipartite(PatternKind h) -> TheoremId { return {TheoremKind::PentagonBipartite, 0, h}; }
};

inline auto to_string(const TheoremId &t) -> std::string {
  switch (t.kind) {
  case TheoremKind::AES:
    return "AES(" + std::to_string(t.param) + ")";
  case TheoremKind::DirectedOddCycle:
    return "DirectedOddCycle(" + std::to_string(t.param) + ")";
  case TheoremKind::PentagonBipartite:
    return "PentagonBipartite(" + to_string(PatternId{t.pentagon, 0, 0, nullptr, {}}) + ")";
  }
  return "?";
}

struct TheoremCheck {
  TheoremId theorem;
  int n = 0;
  SearchConfig config;
  std::uint64_t scanned = 0;
  std::uint64_t hypothesis_count = 0;
  std::uint64_t conclusion_failures = 0;
  std::optional<Digraph> counterexample;
  bool asymptotic = false; ///< failures are finite-scale artifacts, not refutations
};

namespace detail {

// Degree part of each hypothesis, in exact integers.
inline auto degree_hypothesis(const TheoremId &t, int n, int delta) -> bool {
  switch (t.kind) {
  case TheoremKind::AES:
    return static_cast<long long>(3 * t.param - 4) * delta > static_cast<long long>(3 * t.param - 7) * n;
  case TheoremKind::DirectedOddCycle:
    return 2 * delta >= n + t.param - 2;
  case TheoremKind::PentagonBipartite:
    return 3 * delta > n;
  }
  return false;
}

// Returns nullopt when the freeness hypothesis fails, else whether the
// conclusion holds.
inline auto theorem_outcome(const TheoremId &t, const Digraph &d) -> std::optional<bool> {
  switch (t.kind) {
  case TheoremKind::AES:
    if (find_transitive_tournament(d, t.param))
      return std::nullopt;
    return is_k_colorable(d, t.param - 1).has_value();
  case TheoremKind::DirectedOddCycle:
    return contains_pattern(d, PatternId::directed_cycle(t.param)).has_value();
  case TheoremKind::PentagonBipartite:
    if (contains_pattern(d, PatternId{t.pentagon, 0, 0, nullptr, {}}))
      return std::nullopt;
    return is_bipartite(d).bipartite;
  }
  return false;
}

struct TheoremAcc {
  std::uint64_t scanned = 0, hypothesis = 0, failures = 0;
  std::optional<DigraphCode> first_code;
  std::optional<Digraph> first;
};

} // namespace detail

inline auto verify_theorem(const TheoremId &t, int n, const SearchConfig &config) -> TheoremCheck {
  if (t.kind == TheoremKind::AES && t.param < 3)
    throw ParameterError("AES needs r >= 3");
  if (t.kind == TheoremKind::DirectedOddCycle && t.param < 3)
    throw ParameterError("cycle length must be >= 3");
  if (t.kind == TheoremKind::PentagonBipartite && t.pentagon != PatternKind::C5Prime &&
      t.pentagon != PatternKind::C5DoublePrime && t.pentagon != PatternKind::C5TriplePrime)
    throw ParameterError("pentagon theorem covers C5', C5'' and C5'''");
  auto step = [&](detail::TheoremAcc &acc, DigraphCode code, const Digraph &d, int delta) {
    ++acc.scanned;
    if (!detail::degree_hypothesis(t, n, delta))
      return;
    const auto outcome = detail::theorem_outcome(t, d);
    if (!outcome)
      return;
    ++acc.hypothesis;
    if (*outcome)
      return;
    ++acc.failures;
    if (!acc.first_code || code < *acc.first_code) {
      acc.first_code = code;
      acc.first = d;
    }
  };
  auto merge = [](detail::TheoremAcc &a, detail::TheoremAcc p) {
    a.scanned += p.scanned;
    a.hypothesis += p.hypothesis;
    a.failures += p.failures;
    if (p.first_code && (!a.first_code || *p.first_code < *a.first_code)) {
      a.first_code = p.first_code;
      a.first = std::move(p.first);
    }
  };
  detail::TheoremAcc acc;
  if (config.mode == SearchMode::Exhaustive) {
    const DigraphCode total = labelled_count(n);
    acc = detail::sharded_reduce<detail::TheoremAcc>(
        total, config.workers,
        [&](DigraphCode lo, DigraphCode hi) {
          detail::TheoremAcc part;
          for (DigraphCode code = lo; code < hi; ++code) {
            const int delta = code_min_out_degree(n, code);
            if (!detail::degree_hypothesis(t, n, delta)) {
              ++part.scanned;
              continue;
            }
            step(part, code, decode_digraph(n, code), delta);
          }
          return part;
        },
        merge);
  } else if (config.mode == SearchMode::Random) {
    if (n < 1 || n > 64)
      throw SizeError("random mode supports 1 <= n <= 64");
    acc = detail::sharded_reduce<detail::TheoremAcc>(
        config.trials, config.workers,
        [&](std::uint64_t lo, std::uint64_t hi) {
          detail::TheoremAcc part;
          auto rng = detail::block_rng(config.seed, lo / detail::kChunk);
          for (std::uint64_t i = lo; i < hi; ++i) {
            const Digraph d = detail::random_digraph(n, rng);
            step(part, i, d, min_out_degree(d));
          }
          return part;
        },
        merge);
  } else {
    throw ParameterError("theorem checks run in exhaustive or random mode");
  }
  TheoremCheck out{t, n, config, acc.scanned, acc.hypothesis, acc.failures, acc.first,
                   t.kind == TheoremKind::PentagonBipartite};
  if (out.counterexample) {
    const Digraph &c = *out.counterexample;
    const auto outcome = detail::theorem_outcome(t, c);
    if (!detail::degree_hypothesis(t, n, min_out_degree(c)) || !outcome || *outcome)
      throw InvariantViolation("counterexample failed re-verification");
  }
  return out;
}

} // namespace chromprof
