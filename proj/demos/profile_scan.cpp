// Exhaustive profile scan for small n, then a hill-climb from a construction.

#include <chromprof/chromprof.hpp>

#include <cstdio>
#include <thread>

int main() {
  using namespace chromprof;
  const int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const std::vector<PatternId> patterns{PatternId::transitive(3), PatternId::directed_cycle(3),
                                        PatternId::c5(C5Orientation::Prime)};
  for (const auto &p : patterns)
    for (int n = 3; n <= 5; ++n) {
      const auto rep = empirical_profile(p, 2, n, {SearchMode::Exhaustive, 0, 0, workers});
      std::printf("%-5s n=%d best delta+ %s  (%llu scanned, %llu free, %llu not 2-colourable)\n",
                  to_string(p).c_str(), n,
                  rep.best_delta_plus ? std::to_string(*rep.best_delta_plus).c_str() : "-",
                  static_cast<unsigned long long>(rep.counts.scanned),
                  static_cast<unsigned long long>(rep.counts.pattern_free),
                  static_cast<unsigned long long>(rep.counts.non_colorable));
    }
  const auto hc = hillclimb_extremal(PatternId::transitive(3), 2, 15, 7, 20000, extremal_aes(15, 3));
  std::printf("hill-climb T3 n=15 from AES: delta+ %d\n", hc.best_delta_plus.value_or(-1));
}
