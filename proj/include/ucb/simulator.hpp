#pragma once

#include <cstdint>
#include <vector>

#include "ucb/policies.hpp"

namespace ucb::sim {

// A K-armed Gaussian environment. Each arm's true standard deviation may be
// anywhere in (0, sigma]; sigma is the level the policy is told about.
struct BanditInstance {
  std::vector<double> means;
  std::vector<double> stds;
  double sigma = 1.0;
  std::int64_t horizon = 0;  // T

  std::size_t num_arms() const noexcept { return means.size(); }
  std::int64_t t_prime() const noexcept {
    return horizon - static_cast<std::int64_t>(means.size());
  }
  double best_mean() const;
  double gap(std::size_t arm) const;  // Delta_a = mu* - mu_a
  void validate() const;              // throws std::invalid_argument
};

// One simulated episode. Pseudo-regret weights each pull by its gap, which is
// the quantity the bounds control and has much lower Monte Carlo variance
// than realized-reward regret.
struct RegretTrace {
  std::vector<std::int32_t> arms;          // length T, 0-based
  std::vector<double> rewards;             // length T
  std::vector<double> cum_pseudo_regret;   // length T, nondecreasing
  std::vector<std::int64_t> pulls_per_arm; // length K, sums to T
  std::uint64_t seed = 0;
  std::int64_t replication_id = 0;
};

// Runs one episode: round-robin initialization for t <= K, index selection
// afterwards, rewards N(mu_a, std_a^2) drawn from a SplitMix64 stream seeded
// with `seed`. Identical (instance, spec, seed) gives a bit-identical trace.
RegretTrace run_episode(const BanditInstance& instance, const policies::PolicySpec& spec,
                        std::uint64_t seed, std::int64_t replication_id = 0);

// Sum_a Delta_a (n_{a,T} - 1): cumulative pseudo-regret excluding the one
// initialization pull of each arm.
double post_init_regret(const RegretTrace& trace, const BanditInstance& instance);

struct AggregateResult {
  std::int64_t replications = 0;
  double mean_post_init_regret = 0.0;
  double std_error = 0.0;  // sample std / sqrt(R); NaN when R < 2
  double mean_full_regret = 0.0;
  std::vector<double> mean_pulls;         // length K
  std::vector<double> mean_regret_curve;  // length T
};

// Replication r draws from the stream stream_seed(master_seed, r), so results
// do not depend on thread count or scheduling; partial sums are accumulated
// in fixed replication blocks for bit-stable output.
AggregateResult run_replications(const BanditInstance& instance, const policies::PolicySpec& spec,
                                 std::int64_t replications, std::uint64_t master_seed,
                                 int num_threads = 0);

}  // namespace ucb::sim
