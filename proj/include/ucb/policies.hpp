#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "ucb/exploration.hpp"

namespace ucb::policies {

// Index rules. Sample means are combined with an exploration bonus:
//   ConstantUcb   mean + sigma * b / sqrt(n)            (b fixed for the run)
//   LaiUcb        mean + sigma * sqrt(2 log_+(T'/n)/n)  (bonus shrinks with n)
//   Ucb1          mean + sqrt(alpha log t / n)
//   KlUcbGauss    mean + sigma * sqrt(2 (log t + 3 log log t)/n)
//   FollowTheLeader  mean (greedy)
struct ConstantUcb {
  exploration::ExplorationLevel level;
};
struct LaiUcb {};
struct Ucb1 {
  double alpha = 2.0;
};
struct KlUcbGauss {};
struct FollowTheLeader {};

using Rule = std::variant<ConstantUcb, LaiUcb, Ucb1, KlUcbGauss, FollowTheLeader>;

struct PolicySpec {
  Rule rule;
  double sigma = 1.0;        // prespecified noise level, not estimated
  std::int64_t horizon = 0;  // T
};

struct ArmStatistics {
  std::int64_t pulls = 0;
  double mean = 0.0;
  double sum = 0.0;
};

double index_constant(double mean, std::int64_t pulls, double sigma, double b);
double index_lai(double mean, std::int64_t pulls, double sigma, std::int64_t t_prime);
double index_ucb1(double mean, std::int64_t pulls, double t, double alpha);
double index_klucb_gauss(double mean, std::int64_t pulls, double t, double sigma);

// Per-run mutable state: one ArmStatistics per arm plus the step counter.
// Arms are 0-based. The first K selections are the round-robin initialization
// 0, 1, ..., K-1; afterwards select_arm() returns the argmax of the rule's
// index with ties broken toward the lowest arm.
class PolicyState {
 public:
  PolicyState(PolicySpec spec, std::size_t num_arms);

  std::size_t select_arm() const;
  void update(std::size_t arm, double reward);

  const PolicySpec& spec() const noexcept { return spec_; }
  const std::vector<ArmStatistics>& arms() const noexcept { return arms_; }
  std::int64_t time() const noexcept { return time_; }
  std::size_t num_arms() const noexcept { return arms_.size(); }
  std::int64_t t_prime() const noexcept {
    return spec_.horizon - static_cast<std::int64_t>(arms_.size());
  }

 private:
  double index_of(std::size_t arm, double t_next) const;

  PolicySpec spec_;
  std::vector<ArmStatistics> arms_;
  std::int64_t time_ = 0;
};

}  // namespace ucb::policies
