#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ucb/exploration.hpp"

namespace ex = ucb::exploration;

TEST_CASE("log_plus") {
  CHECK(ex::log_plus(1.0) == 1.0);
  CHECK(ex::log_plus(M_E) == 1.0);
  CHECK(ex::log_plus(M_E * M_E) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(ex::log_plus(0.1) == 1.0);
  CHECK_THROWS_AS(ex::log_plus(0.0), std::invalid_argument);
  CHECK_THROWS_AS(ex::log_plus(-3.0), std::invalid_argument);
}

TEST_CASE("sqrt_two_log_level") {
  CHECK(ex::sqrt_two_log_level(100).b == doctest::Approx(3.0348542587702925).epsilon(1e-14));
  CHECK(ex::sqrt_two_log_level(3).b == doctest::Approx(std::sqrt(2.0 * std::log(3.0))).epsilon(1e-15));
  CHECK(ex::sqrt_two_log_level(3).b == doctest::Approx(1.482304).epsilon(1e-6));
  CHECK(ex::sqrt_two_log_level(2).b == doctest::Approx(1.1774100225154747).epsilon(1e-13));
  CHECK(ex::sqrt_two_log_level(2).horizon_after_init == 2);
  CHECK(ex::sqrt_two_log_level(2).method == ex::LevelMethod::kSqrtTwoLog);
  CHECK_THROWS_AS(ex::sqrt_two_log_level(1), std::invalid_argument);
}

TEST_CASE("argmin_eta_level: derivative root and reference values") {
  const double b100 = ex::argmin_eta_level(100).b;
  CHECK(b100 == doctest::Approx(2.1640640935717634).epsilon(1e-9));
  const double b1 = ex::argmin_eta_level(1).b;
  CHECK(b1 == doctest::Approx(0.636027284616584).epsilon(1e-9));
  for (std::int64_t tp : {1, 100, 10000, 100000000}) {
    const double b = ex::argmin_eta_level(tp).b;
    CHECK(std::abs(ex::eta_objective_derivative(b, tp)) <= 1e-12);
    // local minimality of the objective itself
    const double f0 = ex::eta_objective(b, tp);
    CHECK(ex::eta_objective(b - 1e-3, tp) > f0);
    CHECK(ex::eta_objective(b + 1e-3, tp) > f0);
  }
  CHECK_THROWS_AS(ex::argmin_eta_level(0), std::invalid_argument);
}

TEST_CASE("argmin_eta_level: nondecreasing in T'") {
  double prev = 0.0;
  std::int64_t tp = 1;
  for (int e = 0; e <= 8; ++e) {
    const double b = ex::argmin_eta_level(tp).b;
    CHECK(b >= prev);
    prev = b;
    tp *= 10;
  }
}

TEST_CASE("argmin_eta_level: expansion gap shrinks with T'") {
  // |b^2 - (2 log T' - 3 log log T' - log pi)| is nonincreasing over 1e3..1e8.
  constexpr double kPi = 3.14159265358979323846;
  double prev = std::numeric_limits<double>::infinity();
  std::int64_t tp = 1000;
  for (int e = 3; e <= 8; ++e) {
    const double b = ex::argmin_eta_level(tp).b;
    const double t = static_cast<double>(tp);
    const double expansion = 2.0 * std::log(t) - 3.0 * std::log(std::log(t)) - std::log(kPi);
    const double gap = std::abs(b * b - expansion);
    CHECK(gap <= prev + 1e-12);
    prev = gap;
    tp *= 10;
  }
}

TEST_CASE("fixed_level allows b = 0 but rejects negatives") {
  CHECK(ex::fixed_level(0.0, 10).b == 0.0);
  CHECK(ex::fixed_level(2.5, 10).method == ex::LevelMethod::kFixed);
  CHECK_THROWS_AS(ex::fixed_level(-0.1, 10), std::invalid_argument);
}

TEST_CASE("big_l") {
  CHECK(ex::big_l(M_E) == 1.0);
  CHECK(ex::big_l(1e6) == doctest::Approx(11.400515179523278).epsilon(1e-12));
  CHECK(ex::big_l(100.0) == doctest::Approx(3.480893217444141).epsilon(1e-12));
  CHECK(ex::big_l(0.5) >= 1.0);
  // nondecreasing for x >= e
  double prev = 0.0;
  for (double x = M_E; x < 1e8; x *= 3.0) {
    CHECK(ex::big_l(x) >= prev);
    prev = ex::big_l(x);
  }
  CHECK_THROWS_AS(ex::big_l(0.0), std::invalid_argument);
}

TEST_CASE("xbar: fixed point, residual, bbar floor") {
  const auto r1 = ex::xbar(1.0, 100);
  CHECK(r1.xbar == doctest::Approx(3.38563014029005).epsilon(1e-9));
  const auto r2 = ex::xbar(2.0, 100);
  CHECK(r2.xbar == doctest::Approx(1.1224206373798413).epsilon(1e-9));
  // saturated branch: T' gamma^2 <= e gives exactly x = 1/gamma^2
  const auto sat = ex::xbar(0.125, 100);  // T' gamma^2 = 1.5625 <= e
  CHECK(sat.xbar == 64.0);
  CHECK(sat.bbar == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  for (double gamma : {0.05, 0.2, 0.7, 1.0, 2.0, 10.0}) {
    for (std::int64_t tp : {1, 10, 1000, 1000000}) {
      const auto r = ex::xbar(gamma, tp);
      const double lp = std::max(1.0, std::log(static_cast<double>(tp) / r.xbar));
      CHECK(std::abs(gamma * gamma * r.xbar - lp) <= 1e-10);
      CHECK(r.bbar >= std::sqrt(2.0) - 1e-15);
      CHECK(r.bbar == doctest::Approx(gamma * std::sqrt(2.0 * r.xbar)).epsilon(1e-14));
    }
  }
  CHECK_THROWS_AS(ex::xbar(0.0, 100), std::invalid_argument);
  CHECK_THROWS_AS(ex::xbar(1.0, 0), std::invalid_argument);
}
