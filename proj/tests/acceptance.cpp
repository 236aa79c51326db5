// Acceptance gate: one PASS/FAIL line per criterion, each with a wall-clock
// budget. Exits nonzero if any criterion fails.

#include <chromprof/suite.hpp>

#include <cstdio>
#include <map>
#include <string>

namespace {

struct Criterion {
  int id;
  const char *title;
  double limit_seconds;
  bool expect_skipped;
};

constexpr Criterion kCriteria[] = {
    {1, "construction equalities", 10.0, false},
    {2, "exhaustive theorem verification n <= 5", 120.0, false},
    {3, "homomorphism facts", 1.0, false},
    {4, "finder soundness under hypothesis", 60.0, false},
    {5, "saturation and wheel extraction", 60.0, false},
    {6, "pentagon morphing", 30.0, false},
    {7, "empirical profile anchors", 120.0, false},
    {8, "asymptotic results recorded as out of scope", 1.0, true},
};

} // namespace

int main() {
  using namespace chromprof;
  SuiteOptions opt;
  opt.workers = 4;
  opt.n_max = 5;

  std::map<int, std::vector<ClaimResult>> by_criterion;
  for (const auto &spec : suite_manifest())
    by_criterion[spec.criterion].push_back(run_claim(spec, opt));

  bool all = true;
  for (const auto &c : kCriteria) {
    const auto &claims = by_criterion[c.id];
    double seconds = 0;
    bool ok = !claims.empty();
    std::string ids;
    for (const auto &r : claims) {
      seconds += r.seconds;
      ids += (ids.empty() ? "" : ", ") + r.id + "=" + to_string(r.status);
      if (c.expect_skipped)
        ok = ok && r.status == ClaimStatus::SkippedOutOfScope;
      else
        ok = ok && (r.status == ClaimStatus::Verified || r.status == ClaimStatus::FiniteArtifact);
    }
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = ok && in_time;
    all = all && pass;
    std::printf("%s criterion %d (%s): %.2fs, limit %.0fs%s [%s]\n", pass ? "PASS" : "FAIL", c.id, c.title, seconds,
                c.limit_seconds, in_time ? "" : " EXCEEDED", ids.c_str());
    for (const auto &r : claims)
      for (const auto &f : r.failures)
        std::printf("    %s: %s\n", r.id.c_str(), f.c_str());
  }
  return all ? 0 : 1;
}
