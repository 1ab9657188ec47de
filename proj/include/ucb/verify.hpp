#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ucb::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  bool informational = false;  // reported but does not gate the exit code
  bool reduced = false;        // ran with reduced replication counts (--fast)
  std::string details;
};

struct Options {
  bool fast = false;  // divide Monte Carlo replication counts by 10
  int num_threads = 0;
  std::uint64_t seed = 20240901;
};

using ResultCallback = std::function<void(const CriterionResult&)>;

// Runs the full verification suite (ten criteria) at the documented sizes.
// The callback, when given, fires after each criterion completes.
std::vector<CriterionResult> run_all(const Options& options, const ResultCallback& on_result = {});

// True when every non-informational criterion passed.
bool all_gating_pass(const std::vector<CriterionResult>& results);

std::string format_result_line(const CriterionResult& result);

}  // namespace ucb::verify
