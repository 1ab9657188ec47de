#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "support/oracles.hpp"
#include "ucb/crossing.hpp"
#include "ucb/gauss.hpp"

namespace cr = ucb::crossing;

TEST_CASE("mc_max_normalized_walk: basics") {
  const auto est = cr::mc_max_normalized_walk(2.0, 100, 5000, 3);
  CHECK(est.estimate >= 0.0);
  CHECK(est.estimate <= 1.0);
  CHECK(est.std_error ==
        doctest::Approx(std::sqrt(est.estimate * (1.0 - est.estimate) / 5000.0)).epsilon(1e-12));
  CHECK(est.replications == 5000);
  CHECK(est.path_steps == 100);
  CHECK(est.discretization == cr::Discretization::kExactIntegerTime);
  // zero boundary: S_1 >= 0 alone has probability 1/2
  CHECK(cr::mc_max_normalized_walk(0.0, 10, 20000, 3).estimate >= 0.5);
  CHECK_THROWS_AS(cr::mc_max_normalized_walk(-1.0, 10, 100, 3), std::invalid_argument);
}

TEST_CASE("mc_max_normalized_walk: pathwise monotone in T' under a shared seed") {
  const auto e10 = cr::mc_max_normalized_walk(2.0, 10, 20000, 77);
  const auto e100 = cr::mc_max_normalized_walk(2.0, 100, 20000, 77);
  const auto e1000 = cr::mc_max_normalized_walk(2.0, 1000, 20000, 77);
  CHECK(e10.estimate <= e100.estimate);
  CHECK(e100.estimate <= e1000.estimate);
}

TEST_CASE("mc_max_normalized_walk: determinism and thread independence") {
  const auto a = cr::mc_max_normalized_walk(2.5, 500, 20000, 11, 1);
  const auto b = cr::mc_max_normalized_walk(2.5, 500, 20000, 11, 4);
  CHECK(a.estimate == b.estimate);
}

TEST_CASE("mc_max_normalized_walk: two independent seeds agree within error") {
  const double b = std::sqrt(2.0 * std::log(1000.0));
  const auto e1 = cr::mc_max_normalized_walk(b, 1000, 1000000, 101);
  const auto e2 = cr::mc_max_normalized_walk(b, 1000, 1000000, 202);
  const double combined = std::sqrt(e1.std_error * e1.std_error + e2.std_error * e2.std_error);
  CHECK(std::abs(e1.estimate - e2.estimate) <= 4.0 * combined);
}

TEST_CASE("mc_drifted_crossing: stays below Phi2(-b)/gamma^2") {
  for (const auto& [b, gamma] : std::vector<std::pair<double, double>>{
           {1.0, 0.5}, {2.0, 0.2}, {2.0, 0.5}}) {
    const auto est = cr::mc_drifted_crossing(b, gamma, 2000, 20000, 13);
    const double bound = ucb::gauss::phi2(-b) / (gamma * gamma);
    CHECK(est.estimate <= bound + 3.0 * est.std_error);
  }
  // a huge drift makes the event impossible at double range
  const auto none = cr::mc_drifted_crossing(1.0, 1000.0, 100, 20000, 13);
  CHECK(none.estimate == 0.0);
  CHECK_THROWS_AS(cr::mc_drifted_crossing(0.0, 0.5, 10, 100, 1), std::invalid_argument);
  CHECK_THROWS_AS(cr::mc_drifted_crossing(1.0, -0.5, 10, 100, 1), std::invalid_argument);
}

TEST_CASE("mc_lai_boundary: scaling (n, gamma) -> (4n, gamma/2) is exact with a shared seed") {
  const auto a = cr::mc_lai_boundary(25.0, 2.0, 50, 20000, 99);
  const auto b = cr::mc_lai_boundary(100.0, 1.0, 50, 20000, 99);
  CHECK(a.prob.estimate == b.prob.estimate);
  CHECK(a.implied_c0 == b.implied_c0);
}

TEST_CASE("mc_lai_boundary: implied c0 respects the cap") {
  const auto est = cr::mc_lai_boundary(100.0, 1.0, 200, 20000, 12);
  CHECK(est.implied_c0 <= 1.7068 + 3.0 * est.c0_std_error);
  CHECK(est.prob.estimate >= 0.0);
  CHECK(est.prob.estimate <= 1.0);
  CHECK(est.prob.discretization == cr::Discretization::kEulerApprox);
  CHECK(est.prob.path_steps == 1600);
  CHECK_THROWS_AS(cr::mc_lai_boundary(100.0, 1.0, 9, 100, 1), std::invalid_argument);
  CHECK_THROWS_AS(cr::mc_lai_boundary(-5.0, 1.0, 200, 100, 1), std::invalid_argument);
}

TEST_CASE("g_b_theta: sign, limits, oracle") {
  // window skews left of the drift, so the conditional deficit is positive
  for (double b : {0.5, 1.0, 2.0, 4.0}) {
    for (double theta : {0.1, 0.5, 1.0, 3.0}) {
      CHECK(cr::g_b_theta(b, theta) > 0.0);
    }
  }
  // theta -> 0+: symmetric window, deficit vanishes
  CHECK(std::abs(cr::g_b_theta(2.0, 1e-9)) <= 1e-6);
  // quadrature oracle at (b, theta) = (2, 1): -E[Z | -3 < Z < 1]
  const double num = oracle::integrate(
      [](double z) { return z * oracle::std_normal_pdf(z); }, -3.0, 1.0);
  const double den = oracle::integrate(
      [](double z) { return oracle::std_normal_pdf(z); }, -3.0, 1.0);
  CHECK(cr::g_b_theta(2.0, 1.0) == doctest::Approx(-num / den).epsilon(1e-10));
  // vanishing conditioning mass
  CHECK_THROWS_AS(cr::g_b_theta(1.0, 50.0), std::domain_error);
}

TEST_CASE("stopping_sqrt_bound: defining equation and inequality chain") {
  for (double b : {0.5, 1.0, 2.0, 3.0, 5.0}) {
    for (double theta : {0.25, 0.5, 1.0, 2.0, 4.0}) {
      const double g = cr::g_b_theta(b, theta);
      const double t = cr::stopping_sqrt_bound(b, theta);
      CHECK(std::abs(theta * t * t - b * t - g) <= 1e-12);
      CHECK(t <= b / theta + g / b + 1e-12);
      CHECK(t <= b / theta + std::sqrt(g / theta) + 1e-12);
    }
  }
}

TEST_CASE("mc_stopping_check: sample mean of sqrt(tau) below its bound") {
  const auto chk = cr::mc_stopping_check(3.0, 1.0, 1e-3, 3000, 2025);
  CHECK(chk.t_theta == doctest::Approx(cr::stopping_sqrt_bound(3.0, 1.0)).epsilon(1e-15));
  // discrete detection is late; only trust the check when the cap is idle
  CHECK(chk.cap_hit_fraction <= 0.01);
  CHECK(chk.mean_sqrt_tau <= chk.t_theta + 3.0 * chk.std_error);
  CHECK_THROWS_AS(cr::mc_stopping_check(3.0, 1.0, 0.01, 100, 1), std::invalid_argument);
}
