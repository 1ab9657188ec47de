#pragma once

#include <cstdint>

namespace ucb::crossing {

enum class Discretization {
  kExactIntegerTime,  // the event is defined over integer times; no grid error
  kEulerApprox,       // Brownian path on a grid; the discrete sup underestimates
};

struct CrossingEstimate {
  double estimate = 0.0;   // in [0, 1]
  double std_error = 0.0;  // sqrt(p (1-p) / R)
  std::int64_t replications = 0;
  std::int64_t path_steps = 0;
  Discretization discretization = Discretization::kExactIntegerTime;
};

// P{ max_{1<=m<=T'} S_m / sqrt(m) >= b } for a standard Gaussian random walk
// S_m. Replication r uses stream_seed(seed, r), so estimates with a shared
// seed are pathwise comparable across horizons.
CrossingEstimate mc_max_normalized_walk(double b, std::int64_t t_prime, std::int64_t replications,
                                        std::uint64_t seed, int num_threads = 0);

// P{ exists m <= T': S_m >= sqrt(m) b + m gamma }; a truncation of the
// all-horizons event, so the estimate must stay below Phi2(-b)/gamma^2.
CrossingEstimate mc_drifted_crossing(double b, double gamma, std::int64_t t_prime,
                                     std::int64_t replications, std::uint64_t seed,
                                     int num_threads = 0);

struct LaiBoundaryEstimate {
  CrossingEstimate prob;    // P{ sup_{0<t<=n} |W(t)| / (sqrt(2 t log_+(n/t)) + t gamma) >= 1 }
  double implied_c0 = 0.0;  // n gamma^2 * estimate
  double c0_std_error = 0.0;
  double n = 0.0;
  double gamma = 0.0;
};

// Euler walk on a geometric grid with points_per_decade points per decade of
// time over (n 1e-8, n]; the boundary changes fastest near 0, where the grid
// is densest in relative terms. The discrete sup underestimates the
// continuous one, so one-sided "estimate <= cap" checks remain valid.
// The estimate depends on (n, gamma) only through n gamma^2 and the
// construction preserves that exactly: (4n, gamma/2) with the same seed
// reproduces the (n, gamma) indicator path by path.
LaiBoundaryEstimate mc_lai_boundary(double n, double gamma, int points_per_decade,
                                    std::int64_t replications, std::uint64_t seed,
                                    int num_threads = 0);

// g_b(theta) = E_theta[theta - X(1) | tau_b > 1] for X(t) = W(t) + theta t and
// tau_b = inf{t >= 1 : |X(t)| >= b sqrt(t)}; equals -E[Z | -b-theta < Z < b-theta].
double g_b_theta(double b, double theta);

// t_theta = (b + sqrt(b^2 + 4 theta g_b(theta))) / (2 theta), the solution of
// theta t^2 = b t + g_b(theta); an upper bound for E[sqrt(tau_b) | tau_b > 1].
double stopping_sqrt_bound(double b, double theta);

struct StoppingCheck {
  double mean_sqrt_tau = 0.0;
  double std_error = 0.0;
  double t_theta = 0.0;
  double cap_hit_fraction = 0.0;  // paths stopped at t_max = 100 t_theta^2
  std::int64_t replications = 0;
  double dt = 0.0;
};

// Simulates the drifted path from t = 1 with X(1) rejection-sampled on
// |X(1)| < b, Euler step dt, until |X(t)| >= b sqrt(t) or the cap. Discrete
// crossing detection is late, so mean_sqrt_tau is biased upward; the check
// against t_theta is only meaningful when cap_hit_fraction is small.
StoppingCheck mc_stopping_check(double b, double theta, double dt, std::int64_t replications,
                                std::uint64_t seed, int num_threads = 0);

}  // namespace ucb::crossing
