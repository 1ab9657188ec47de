// Acceptance suite: runs every verification criterion at its documented size
// and prints one verdict line per criterion. Exit status 0 only when all
// gating criteria pass. `UCBLAB_ACCEPTANCE_FAST=1` switches to the reduced
// replication counts (same switch as `ucblab verify --fast`).

#include <cstdlib>
#include <iostream>

#include "ucb/verify.hpp"

int main() {
  ucb::verify::Options options;
  const char* fast = std::getenv("UCBLAB_ACCEPTANCE_FAST");
  options.fast = fast != nullptr && fast[0] == '1';

  const auto results = ucb::verify::run_all(options, [](const ucb::verify::CriterionResult& r) {
    std::cout << ucb::verify::format_result_line(r) << "\n" << std::flush;
  });

  const bool ok = ucb::verify::all_gating_pass(results);
  std::cout << (ok ? "acceptance: PASS" : "acceptance: FAIL") << "\n";
  return ok ? 0 : 1;
}
