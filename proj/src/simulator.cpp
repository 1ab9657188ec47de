#include "ucb/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ucb/parallel.hpp"
#include "ucb/rng.hpp"

namespace ucb::sim {

double BanditInstance::best_mean() const {
  return *std::max_element(means.begin(), means.end());
}

double BanditInstance::gap(std::size_t arm) const { return best_mean() - means[arm]; }

void BanditInstance::validate() const {
  if (means.size() < 2) throw std::invalid_argument("BanditInstance: needs at least 2 arms");
  if (stds.size() != means.size()) {
    throw std::invalid_argument("BanditInstance: stds must match means in length");
  }
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("BanditInstance: sigma must be positive");
  }
  for (double m : means) {
    if (!std::isfinite(m)) throw std::invalid_argument("BanditInstance: means must be finite");
  }
  for (double s : stds) {
    if (!(s > 0.0) || !(s <= sigma)) {
      throw std::invalid_argument("BanditInstance: stds must lie in (0, sigma]");
    }
  }
  // horizon == K is allowed at the library level (initialization-only run).
  if (horizon < static_cast<std::int64_t>(means.size())) {
    throw std::invalid_argument("BanditInstance: horizon must cover the initialization round");
  }
}

RegretTrace run_episode(const BanditInstance& instance, const policies::PolicySpec& spec,
                        std::uint64_t seed, std::int64_t replication_id) {
  instance.validate();
  if (spec.horizon != instance.horizon) {
    throw std::invalid_argument("run_episode: spec and instance horizons differ");
  }
  if (spec.sigma != instance.sigma) {
    throw std::invalid_argument("run_episode: spec and instance sigma differ");
  }
  const std::size_t k = instance.num_arms();
  const auto t_total = static_cast<std::size_t>(instance.horizon);
  policies::PolicyState state(spec, k);
  SplitMix64 rng(seed);

  RegretTrace trace;
  trace.seed = seed;
  trace.replication_id = replication_id;
  trace.arms.reserve(t_total);
  trace.rewards.reserve(t_total);
  trace.cum_pseudo_regret.reserve(t_total);

  const double best = instance.best_mean();
  double cum = 0.0;
  for (std::size_t t = 0; t < t_total; ++t) {
    const std::size_t arm = state.select_arm();
    const double reward = instance.means[arm] + instance.stds[arm] * rng.next_normal();
    state.update(arm, reward);
    cum += best - instance.means[arm];
    trace.arms.push_back(static_cast<std::int32_t>(arm));
    trace.rewards.push_back(reward);
    trace.cum_pseudo_regret.push_back(cum);
  }
  trace.pulls_per_arm.resize(k);
  for (std::size_t a = 0; a < k; ++a) trace.pulls_per_arm[a] = state.arms()[a].pulls;
  return trace;
}

double post_init_regret(const RegretTrace& trace, const BanditInstance& instance) {
  double total = 0.0;
  for (std::size_t a = 0; a < trace.pulls_per_arm.size(); ++a) {
    total += instance.gap(a) * static_cast<double>(trace.pulls_per_arm[a] - 1);
  }
  return total;
}

AggregateResult run_replications(const BanditInstance& instance, const policies::PolicySpec& spec,
                                 std::int64_t replications, std::uint64_t master_seed,
                                 int num_threads) {
  if (replications < 1) throw std::invalid_argument("run_replications: requires R >= 1");
  instance.validate();
  const std::size_t k = instance.num_arms();
  const auto t_total = static_cast<std::size_t>(instance.horizon);

  constexpr std::int64_t kBlock = 64;
  const std::int64_t num_blocks = (replications + kBlock - 1) / kBlock;

  struct BlockSums {
    double regret = 0.0;
    double regret_sq = 0.0;
    double full = 0.0;
    std::vector<double> pulls;
    std::vector<double> curve;
  };
  std::vector<BlockSums> blocks(static_cast<std::size_t>(num_blocks));

  parallel_blocks(num_blocks, num_threads, [&](std::int64_t blk) {
    BlockSums sums;
    sums.pulls.assign(k, 0.0);
    sums.curve.assign(t_total, 0.0);
    const std::int64_t lo = blk * kBlock;
    const std::int64_t hi = std::min(replications, lo + kBlock);
    for (std::int64_t r = lo; r < hi; ++r) {
      const RegretTrace trace = run_episode(instance, spec, stream_seed(master_seed, static_cast<std::uint64_t>(r)), r);
      const double reg = post_init_regret(trace, instance);
      sums.regret += reg;
      sums.regret_sq += reg * reg;
      sums.full += trace.cum_pseudo_regret.back();
      for (std::size_t a = 0; a < k; ++a) {
        sums.pulls[a] += static_cast<double>(trace.pulls_per_arm[a]);
      }
      for (std::size_t t = 0; t < t_total; ++t) sums.curve[t] += trace.cum_pseudo_regret[t];
    }
    blocks[static_cast<std::size_t>(blk)] = std::move(sums);
  });

  AggregateResult out;
  out.replications = replications;
  out.mean_pulls.assign(k, 0.0);
  out.mean_regret_curve.assign(t_total, 0.0);
  double sum = 0.0;
  double sum_sq = 0.0;
  double sum_full = 0.0;
  for (const BlockSums& b : blocks) {
    sum += b.regret;
    sum_sq += b.regret_sq;
    sum_full += b.full;
    for (std::size_t a = 0; a < k; ++a) out.mean_pulls[a] += b.pulls[a];
    for (std::size_t t = 0; t < t_total; ++t) out.mean_regret_curve[t] += b.curve[t];
  }
  const double r = static_cast<double>(replications);
  out.mean_post_init_regret = sum / r;
  out.mean_full_regret = sum_full / r;
  for (double& v : out.mean_pulls) v /= r;
  for (double& v : out.mean_regret_curve) v /= r;
  if (replications >= 2) {
    const double var = std::max(0.0, (sum_sq - sum * sum / r) / (r - 1.0));
    out.std_error = std::sqrt(var / r);
  } else {
    out.std_error = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

}  // namespace ucb::sim
