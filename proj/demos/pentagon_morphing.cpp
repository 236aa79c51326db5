// Walks a 5-cycle in a blown-up pentagon through each target orientation.

#include <chromprof/chromprof.hpp>

#include <cstdio>

int main() {
  using namespace chromprof;
  const std::vector<int> sizes(5, 3);
  const Digraph d = double_orientation(blowup(cycle_graph(5), sizes));
  const auto start = odd_girth(d).witness;
  std::printf("start cycle:");
  for (int v : start)
    std::printf(" %d", v);
  std::printf("\n");
  for (auto o : {C5Orientation::Prime, C5Orientation::DoublePrime, C5Orientation::TriplePrime}) {
    const PatternId target = PatternId::c5(o);
    const auto res = morph_pentagon(d, start, target);
    if (const auto *f = found(res)) {
      std::printf("%-6s via %-18s", to_string(target).c_str(), f->route.c_str());
      for (int v : f->embedding.map)
        std::printf(" %d", v);
      std::printf("\n");
    } else {
      std::printf("%-6s stalled at %s\n", to_string(target).c_str(), stalled(res)->stage.c_str());
    }
  }

  // B_n has no C5' at all, so the finder can only refuse.
  const Digraph b = b_n(14);
  std::printf("B_14 contains C5'': %s, C5': %s\n",
              contains_pattern(b, PatternId::c5(C5Orientation::DoublePrime)) ? "yes" : "no",
              contains_pattern(b, PatternId::c5(C5Orientation::Prime)) ? "yes" : "no");
}
