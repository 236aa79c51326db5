// AES extremal digraphs avoid T_r; a complete host above the degree bound
// yields one through the lemma's recursion. Ends with a wheel extraction.

#include <chromprof/chromprof.hpp>

#include <cstdio>

int main() {
  using namespace chromprof;
  for (int r = 3; r <= 5; ++r) {
    const int n = 2 * aes_modulus(r);
    const Digraph d = extremal_aes(n, r);
    const auto chi = chromatic_number(d);
    std::printf("r=%d n=%d delta+=%d chi=%d T_r-free=%s\n", r, n, min_out_degree(d), chi.chi,
                contains_transitive_tournament(d, r) ? "no" : "yes");

    // Complete double orientation on the same n: the degree lemma applies.
    const Digraph dense = double_orientation(complete_graph(n));
    const auto e = find_tr_by_degree(dense, r);
    std::printf("  complete host: T_%d at", r);
    for (int v : e.map)
      std::printf(" %d", v);
    std::printf("\n");
  }

  // Saturating a sparse T_3-free digraph and reading off a wheel.
  const Digraph seed = make_digraph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
  const auto sat = saturate_tr(seed, 3);
  std::printf("saturation added %zu arcs\n", sat.added_arcs.size());
  try {
    const auto w = extract_wheel(sat.saturated, 3);
    std::printf("wheel: v=%d w1=%d w2=%d t=%d valid=%s\n", w.v, w.w1, w.w2, w.t,
                verify_wheel_like(sat.saturated, w, 3) ? "yes" : "no");
  } catch (const HypothesisError &err) {
    std::printf("no wheel: %s\n", err.what());
  }
}
