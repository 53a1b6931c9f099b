// Acceptance run: every criterion once, exact checks, with its wall-clock
// budget. Prints one line per criterion and exits nonzero on any failure.

#include <cstdio>

#include "gformlab/propcheck.hpp"

using namespace gformlab;

int main() {
  // Budgets in seconds, criteria 1..10.
  const double limits[10] = {30, 10, 30, 60, 120, 300, 60, 600, 120, 30};
  SuiteConfig cfg;
  int failures = 0;
  for (int k = 1; k <= 10; ++k) {
    const CheckResult r = run_criterion(k, cfg);
    const bool in_time = r.seconds <= limits[k - 1];
    const bool ok = r.status == Status::Pass && in_time;
    failures += !ok;
    std::printf("criterion %2d  %-4s  %-36s %8.3fs (limit %.0fs)%s\n", k, ok ? "PASS" : "FAIL", r.id.c_str(),
                r.seconds, limits[k - 1], in_time ? "" : "  over budget");
    if (r.status != Status::Pass) std::printf("    details: %s\n", r.details.dump().c_str());
  }
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
