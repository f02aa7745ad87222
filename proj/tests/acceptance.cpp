// One verdict line per acceptance criterion, built from the full suite.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>

#include "frl/kernels.hpp"
#include "frl/verify.hpp"

int main() {
  frl::kernels::apply_thread_cap();
  const auto t0 = std::chrono::steady_clock::now();
  const auto report = frl::verify::run(frl::verify::Suite::Full, &std::cerr);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::map<int, std::vector<const frl::verify::Check*>> by_criterion;
  for (const auto& c : report.checks) by_criterion[c.criterion].push_back(&c);

  bool ok = true;
  for (const auto& [crit, checks] : by_criterion) {
    bool pass = true;
    std::ostringstream detail;
    for (const auto* c : checks) {
      pass = pass && c->pass;
      if (!detail.str().empty()) detail << "; ";
      detail << c->claim << ": " << c->measured << " vs " << c->predicted << " (" << c->tolerance << ')'
             << (c->pass ? "" : " FAIL");
    }
    ok = ok && pass;
    const std::string name = crit == 0 ? "supplementary" : "criterion " + std::to_string(crit);
    std::printf("%s: %s  [%s]\n", name.c_str(), pass ? "PASS" : "FAIL", detail.str().c_str());
  }
  std::printf("elapsed: %.1f s\n", secs);
  return ok ? 0 : 1;
}
