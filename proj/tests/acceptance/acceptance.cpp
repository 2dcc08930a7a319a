// One line per acceptance criterion. A criterion passes when its claim
// passes within the pinned runtime target; the open-ended H-family sequence
// may instead be skipped when the time limit stops it early.

#include <cstdio>
#include <string>
#include <vector>

#include "takeaway/verify.hpp"

namespace {

using namespace takeaway;

struct Criterion {
  int number;
  const char* claim;
  double max_seconds;
  bool best_effort;
};

const Criterion kCriteria[] = {
    {1, "triangle-zero", 1, false},        {2, "bipartite-law", 60, false},
    {3, "disjoint-union", 60, false},      {4, "reduce-preserves", 120, false},
    {5, "kn-mod3", 120, false},            {6, "kn-loops", 300, false},
    {7, "cycles-loop", 5, false},          {8, "g1-g2", 120, false},
    {9, "r-graphs", 300, false},           {10, "odd-cycle-bouquet", 300, false},
    {11, "linked-hubs", 600, false},       {12, "one-attachment", 900, false},
    {13, "multi-attachment", 600, false},  {14, "ell-mex", 1, false},
    {15, "wheel-small", 1800, false},      {16, "q-odd", 900, false},
    {17, "fan-tables", 900, false},        {18, "exceptional-graphs", 300, false},
    {19, "phi2-edge-scan", 1800, false},   {20, "h-family", 1800, true},
};

}  // namespace

int main() {
  GrundyTable table;
  VerifyOptions options;
  options.time_limit_seconds = 600;
  int failed = 0;
  for (const auto& c : kCriteria) {
    const auto r = run_claim(c.claim, table, options);
    const bool in_time = r.runtime_seconds <= c.max_seconds;
    bool ok = r.status == ClaimStatus::Pass && in_time;
    std::string verdict = ok ? "PASS" : "FAIL";
    if (!ok && c.best_effort && r.status == ClaimStatus::Skipped) {
      ok = true;
      verdict = "SKIP";
    }
    failed += !ok;
    std::printf("%s %2d %-20s %8.3f s (target %6.0f s)  %s\n", verdict.c_str(), c.number, c.claim,
                r.runtime_seconds, c.max_seconds, r.observed.c_str());
    if (!in_time) std::printf("     runtime target missed\n");
    if (!r.reason.empty()) std::printf("     %s\n", r.reason.c_str());
    if (!ok) {
      for (const auto& d : r.details) std::printf("     - %s\n", d.c_str());
    }
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria met\n", static_cast<int>(std::size(kCriteria)) - failed, std::size(kCriteria));
  return failed == 0 ? 0 : 1;
}
