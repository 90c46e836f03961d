// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>

#include "tentlim/harness/acceptance.hpp"

int main() {
  tentlim::harness::RunConfig cfg;
  bool all = true;
  int n = 0;
  for (const auto& check : tentlim::harness::acceptance_checks()) {
    const auto r = tentlim::harness::run_check(check, cfg);
    all = all && r.pass;
    std::printf("%s criterion %d: %s [%.3f s / %.3g s] %s\n", r.pass ? "PASS" : "FAIL", ++n, r.title.c_str(),
                r.seconds, r.budget, r.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
