#include "ucb/crossing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "ucb/gauss.hpp"
#include "ucb/parallel.hpp"
#include "ucb/rng.hpp"

namespace ucb::crossing {

namespace {

constexpr std::int64_t kBlock = 4096;

// Counts replications whose walk against the per-step thresholds crosses.
// Hit counts are integers, so the reduction is exact regardless of ordering.
std::int64_t count_threshold_crossings(const std::vector<double>& thresholds,
                                       std::int64_t replications, std::uint64_t seed,
                                       int num_threads, bool two_sided,
                                       const std::vector<double>& step_scale) {
  const std::int64_t num_blocks = (replications + kBlock - 1) / kBlock;
  std::vector<std::int64_t> hits(static_cast<std::size_t>(num_blocks), 0);
  const std::size_t steps = thresholds.size();
  parallel_blocks(num_blocks, num_threads, [&](std::int64_t blk) {
    std::int64_t h = 0;
    const std::int64_t lo = blk * kBlock;
    const std::int64_t hi = std::min(replications, lo + kBlock);
    for (std::int64_t r = lo; r < hi; ++r) {
      SplitMix64 rng(stream_seed(seed, static_cast<std::uint64_t>(r)));
      double s = 0.0;
      for (std::size_t i = 0; i < steps; ++i) {
        s += step_scale.empty() ? rng.next_normal() : step_scale[i] * rng.next_normal();
        const double v = two_sided ? std::abs(s) : s;
        if (v >= thresholds[i]) {
          ++h;
          break;
        }
      }
    }
    hits[static_cast<std::size_t>(blk)] = h;
  });
  std::int64_t total = 0;
  for (std::int64_t h : hits) total += h;
  return total;
}

CrossingEstimate make_estimate(std::int64_t hits, std::int64_t replications,
                               std::int64_t path_steps, Discretization disc) {
  CrossingEstimate e;
  e.replications = replications;
  e.path_steps = path_steps;
  e.discretization = disc;
  e.estimate = static_cast<double>(hits) / static_cast<double>(replications);
  e.std_error = std::sqrt(e.estimate * (1.0 - e.estimate) / static_cast<double>(replications));
  return e;
}

void require_mc_args(double b, std::int64_t t_prime, std::int64_t replications) {
  if (!(b > 0.0) || !std::isfinite(b)) throw std::invalid_argument("crossing: requires b > 0");
  if (t_prime < 1) throw std::invalid_argument("crossing: requires T' >= 1");
  if (replications < 1) throw std::invalid_argument("crossing: requires R >= 1");
}

}  // namespace

CrossingEstimate mc_max_normalized_walk(double b, std::int64_t t_prime, std::int64_t replications,
                                        std::uint64_t seed, int num_threads) {
  // b = 0 is a legitimate degenerate boundary here (the event is S_m >= 0).
  if (!(b >= 0.0) || !std::isfinite(b)) {
    throw std::invalid_argument("crossing: requires b >= 0");
  }
  if (t_prime < 1) throw std::invalid_argument("crossing: requires T' >= 1");
  if (replications < 1) throw std::invalid_argument("crossing: requires R >= 1");
  std::vector<double> thr(static_cast<std::size_t>(t_prime));
  for (std::int64_t m = 1; m <= t_prime; ++m) {
    thr[static_cast<std::size_t>(m - 1)] = b * std::sqrt(static_cast<double>(m));
  }
  const std::int64_t hits = count_threshold_crossings(thr, replications, seed, num_threads,
                                                      /*two_sided=*/false, {});
  return make_estimate(hits, replications, t_prime, Discretization::kExactIntegerTime);
}

CrossingEstimate mc_drifted_crossing(double b, double gamma, std::int64_t t_prime,
                                     std::int64_t replications, std::uint64_t seed,
                                     int num_threads) {
  require_mc_args(b, t_prime, replications);
  if (!(gamma > 0.0)) throw std::invalid_argument("crossing: requires gamma > 0");
  std::vector<double> thr(static_cast<std::size_t>(t_prime));
  for (std::int64_t m = 1; m <= t_prime; ++m) {
    const double md = static_cast<double>(m);
    thr[static_cast<std::size_t>(m - 1)] = b * std::sqrt(md) + md * gamma;
  }
  const std::int64_t hits = count_threshold_crossings(thr, replications, seed, num_threads,
                                                      /*two_sided=*/false, {});
  return make_estimate(hits, replications, t_prime, Discretization::kExactIntegerTime);
}

LaiBoundaryEstimate mc_lai_boundary(double n, double gamma, int points_per_decade,
                                    std::int64_t replications, std::uint64_t seed,
                                    int num_threads) {
  if (!(n > 0.0) || !std::isfinite(n)) throw std::invalid_argument("crossing: requires n > 0");
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw std::invalid_argument("crossing: requires gamma > 0");
  }
  if (points_per_decade < 10) {
    throw std::invalid_argument("crossing: points_per_decade must be at least 10");
  }
  if (replications < 1) throw std::invalid_argument("crossing: requires R >= 1");

  constexpr double kDecades = 8.0;
  const int steps = static_cast<int>(kDecades * points_per_decade);
  // Geometric grid t_k = n * 10^{-8 (1 - k/N)}, k = 1..N; the k-th factor is
  // shared between scaled calls so (4n, gamma/2) reproduces (n, gamma) exactly.
  std::vector<double> t(static_cast<std::size_t>(steps));
  std::vector<double> thr(static_cast<std::size_t>(steps));
  std::vector<double> scale(static_cast<std::size_t>(steps));
  double prev = 0.0;
  for (int k = 1; k <= steps; ++k) {
    const double frac = static_cast<double>(k) / static_cast<double>(steps);
    const double tk = n * std::pow(10.0, -kDecades * (1.0 - frac));
    t[static_cast<std::size_t>(k - 1)] = tk;
    const double lp = std::max(1.0, std::log(n / tk));
    thr[static_cast<std::size_t>(k - 1)] = std::sqrt(2.0 * tk * lp) + tk * gamma;
    scale[static_cast<std::size_t>(k - 1)] = std::sqrt(tk - prev);
    prev = tk;
  }
  const std::int64_t hits = count_threshold_crossings(thr, replications, seed, num_threads,
                                                      /*two_sided=*/true, scale);
  LaiBoundaryEstimate out;
  out.prob = make_estimate(hits, replications, steps, Discretization::kEulerApprox);
  out.n = n;
  out.gamma = gamma;
  const double ng2 = n * gamma * gamma;
  out.implied_c0 = ng2 * out.prob.estimate;
  out.c0_std_error = ng2 * out.prob.std_error;
  return out;
}

double g_b_theta(double b, double theta) {
  if (!(b > 0.0)) throw std::invalid_argument("crossing::g_b_theta: requires b > 0");
  if (!(theta > 0.0)) throw std::invalid_argument("crossing::g_b_theta: requires theta > 0");
  // tau_b > 1 iff |X(1)| < b iff -b-theta < Z < b-theta.
  return -gauss::truncated_mean(-b - theta, b - theta);
}

double stopping_sqrt_bound(double b, double theta) {
  const double g = g_b_theta(b, theta);
  return (b + std::sqrt(b * b + 4.0 * theta * g)) / (2.0 * theta);
}

StoppingCheck mc_stopping_check(double b, double theta, double dt, std::int64_t replications,
                                std::uint64_t seed, int num_threads) {
  if (!(dt > 0.0) || dt >= 0.01) {
    throw std::invalid_argument("crossing::mc_stopping_check: dt must lie in (0, 0.01)");
  }
  if (replications < 2) throw std::invalid_argument("crossing::mc_stopping_check: requires R >= 2");
  const double t_theta = stopping_sqrt_bound(b, theta);
  const double t_max = 100.0 * t_theta * t_theta;
  const double sqrt_dt = std::sqrt(dt);

  const std::int64_t num_blocks = (replications + kBlock - 1) / kBlock;
  struct BlockSums {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::int64_t capped = 0;
  };
  std::vector<BlockSums> blocks(static_cast<std::size_t>(num_blocks));
  parallel_blocks(num_blocks, num_threads, [&](std::int64_t blk) {
    BlockSums sums;
    const std::int64_t lo = blk * kBlock;
    const std::int64_t hi = std::min(replications, lo + kBlock);
    for (std::int64_t r = lo; r < hi; ++r) {
      SplitMix64 rng(stream_seed(seed, static_cast<std::uint64_t>(r)));
      // Exact conditional start: reject X(1) = theta + Z until |X(1)| < b.
      double x = theta + rng.next_normal();
      while (!(std::abs(x) < b)) x = theta + rng.next_normal();
      double t = 1.0;
      bool capped = false;
      for (;;) {
        t += dt;
        x += theta * dt + sqrt_dt * rng.next_normal();
        if (std::abs(x) >= b * std::sqrt(t)) break;
        if (t >= t_max) {
          capped = true;
          break;
        }
      }
      const double v = std::sqrt(t);
      sums.sum += v;
      sums.sum_sq += v * v;
      sums.capped += capped;
    }
    blocks[static_cast<std::size_t>(blk)] = sums;
  });

  double sum = 0.0;
  double sum_sq = 0.0;
  std::int64_t capped = 0;
  for (const BlockSums& s : blocks) {
    sum += s.sum;
    sum_sq += s.sum_sq;
    capped += s.capped;
  }
  const double r = static_cast<double>(replications);
  StoppingCheck out;
  out.replications = replications;
  out.dt = dt;
  out.t_theta = t_theta;
  out.mean_sqrt_tau = sum / r;
  const double var = std::max(0.0, (sum_sq - sum * sum / r) / (r - 1.0));
  out.std_error = std::sqrt(var / r);
  out.cap_hit_fraction = static_cast<double>(capped) / r;
  return out;
}

}  // namespace ucb::crossing
