// Acceptance battery: one PASS/FAIL line per criterion, failing checks listed
// beneath. Exact criteria use zero tolerance; the numeric cross-check uses
// |exact(q0) - double recomputation| <= 1e-9 at q0 = 1/2.
#include <cstdio>
#include <cstring>

#include "cp2q/battery.hpp"

int main(int argc, char** argv) {
  using namespace cp2q;
  const Level level = (argc > 1 && std::strcmp(argv[1], "--smoke") == 0) ? Level::Smoke : Level::Full;
  NumericLedger ledger;
  int failed = 0;
  for (int k = 1; k <= 13; ++k) {
    const SuiteReport r = run_criterion(k, level, ledger);
    std::printf("%s  %2d  %-42s %4zu checks  %7.2fs\n", r.pass() ? "PASS" : "FAIL", k, criterion_title(k).c_str(),
                r.checks.size(), r.seconds);
    for (const auto& c : r.checks)
      if (!c.pass)
        std::printf("        - %s: expected %s, got %s%s%s\n", c.name.c_str(), c.expected.c_str(), c.got.c_str(),
                    c.witness.empty() ? "" : "; ", c.witness.c_str());
    std::fflush(stdout);
    failed += !r.pass();
  }
  std::printf("%d of 13 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
