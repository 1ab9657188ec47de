#include "ucb/exploration.hpp"

#include <cmath>
#include <stdexcept>

#include "ucb/gauss.hpp"

namespace ucb::exploration {

double log_plus(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::invalid_argument("exploration::log_plus: requires x > 0");
  }
  return std::max(1.0, std::log(x));
}

ExplorationLevel sqrt_two_log_level(std::int64_t t_prime) {
  if (t_prime < 2) {
    throw std::invalid_argument("exploration::sqrt_two_log_level: requires T' >= 2");
  }
  return {std::sqrt(2.0 * std::log(static_cast<double>(t_prime))), t_prime,
          LevelMethod::kSqrtTwoLog};
}

double eta_objective(double z, std::int64_t t_prime) {
  return z * z + 4.0 * static_cast<double>(t_prime) * gauss::phi2(-z);
}

double eta_objective_derivative(double z, std::int64_t t_prime) {
  // d/dz E(Z-z)_+^2 = -2 E(Z-z)_+ = -2 (phi(z) - z Phi(-z))
  return 2.0 * z - 8.0 * static_cast<double>(t_prime) * (gauss::pdf(z) - z * gauss::cdf(-z));
}

ExplorationLevel argmin_eta_level(std::int64_t t_prime) {
  if (t_prime < 1) {
    throw std::invalid_argument("exploration::argmin_eta_level: requires T' >= 1");
  }
  double lo = 1e-6;
  double hi = std::sqrt(2.0 * std::log(static_cast<double>(t_prime) + 3.0)) + 3.0;
  // f' is strictly increasing, negative at lo and positive at hi.
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (eta_objective_derivative(mid, t_prime) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {0.5 * (lo + hi), t_prime, LevelMethod::kArgminEta};
}

ExplorationLevel fixed_level(double b, std::int64_t t_prime) {
  if (!(b >= 0.0) || !std::isfinite(b)) {
    throw std::invalid_argument("exploration::fixed_level: requires b >= 0");
  }
  if (t_prime < 0) {
    throw std::invalid_argument("exploration::fixed_level: requires T' >= 0");
  }
  return {b, t_prime, LevelMethod::kFixed};
}

double big_l(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::invalid_argument("exploration::big_l: requires x > 0");
  }
  return log_plus(x / log_plus(x / log_plus(x)));
}

SqrtBoundaryFixedPoint xbar(double gamma, std::int64_t t_prime) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw std::invalid_argument("exploration::xbar: requires gamma > 0");
  }
  if (t_prime < 1) {
    throw std::invalid_argument("exploration::xbar: requires T' >= 1");
  }
  const double g2 = gamma * gamma;
  const double tp = static_cast<double>(t_prime);
  if (tp * g2 <= M_E) {
    // log_+ saturates at 1: the fixed point is exactly gamma^2 x = 1.
    const double x = 1.0 / g2;
    return {x, gamma * std::sqrt(2.0 * x)};
  }
  // h(x) = gamma^2 x - log_+(T'/x) is increasing; bracket and bisect in log x.
  auto h = [&](double x) { return g2 * x - log_plus(tp / x); };
  double lo = std::max(tp * std::exp(-std::min(700.0, tp * g2 + 1.0)), 1e-300);
  double hi = std::max(tp, 1.0 / g2);
  if (h(lo) > 0.0 || h(hi) < 0.0) {
    throw std::logic_error("exploration::xbar: bracket failure");
  }
  double llo = std::log(lo);
  double lhi = std::log(hi);
  for (int i = 0; i < 300 && lhi - llo > 1e-15; ++i) {
    const double mid = 0.5 * (llo + lhi);
    if (h(std::exp(mid)) < 0.0) {
      llo = mid;
    } else {
      lhi = mid;
    }
  }
  const double x = std::exp(0.5 * (llo + lhi));
  return {x, gamma * std::sqrt(2.0 * x)};
}

}  // namespace ucb::exploration
