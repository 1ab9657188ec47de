#pragma once

#include <cstdint>

namespace ucb::exploration {

enum class LevelMethod { kSqrtTwoLog, kArgminEta, kFixed };

// A constant exploration level b tied to the post-initialization horizon T'.
struct ExplorationLevel {
  double b = 0.0;
  std::int64_t horizon_after_init = 0;  // T'
  LevelMethod method = LevelMethod::kFixed;
};

// log_+(x) = max(1, log x), x > 0.
double log_plus(double x);

// b = sqrt(2 log T'), T' >= 2.
ExplorationLevel sqrt_two_log_level(std::int64_t t_prime);

// The unique minimizer over z > 0 of f(z) = z^2 + 4 T' E(Z - z)_+^2, found as
// the root of f'(z) = 2z - 8 T' (phi(z) - z Phi(-z)); f'' = 2 + 8 T' Phi(-z),
// so f is strictly convex and the root is bracketed by
// [1e-6, sqrt(2 log(T'+3)) + 3].
ExplorationLevel argmin_eta_level(std::int64_t t_prime);

// User-chosen constant level. b = 0 degenerates to greedy play and is allowed;
// negative b is rejected.
ExplorationLevel fixed_level(double b, std::int64_t t_prime);

// L(x) = log_+(x / log_+(x / log_+ x)), x > 0. Always >= 1.
double big_l(double x);

// f(z) = z^2 + 4 T' E(Z - z)_+^2 and its derivative in z.
double eta_objective(double z, std::int64_t t_prime);
double eta_objective_derivative(double z, std::int64_t t_prime);

struct SqrtBoundaryFixedPoint {
  double xbar;  // the positive solution of gamma^2 x = log_+(T' / x)
  double bbar;  // gamma sqrt(2 xbar) = sqrt(2 log_+(T'/xbar)); always >= sqrt(2)
};

// Solves the fixed point gamma^2 x = log_+(T'/x). When T' gamma^2 <= e the
// log_+ saturates and the exact solution x = 1/gamma^2 is returned; otherwise
// log-scale bisection over [T' exp(-T' gamma^2 - 1), max(T', 1/gamma^2)]
// drives the residual below 1e-10.
SqrtBoundaryFixedPoint xbar(double gamma, std::int64_t t_prime);

}  // namespace ucb::exploration
