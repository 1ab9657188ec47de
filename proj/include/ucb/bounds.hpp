#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ucb/exploration.hpp"
#include "ucb/simulator.hpp"

namespace ucb::bounds {

enum class BoundKind {
  kTheorem1,         // constant-level UCB, numerator b^2 + 1 + eta(b)
  kCorollary1,       // the b = sqrt(2 log T') specialization, numerator 2 log T' + c1(T')
  kCorollary2,       // the tuned (argmin) level, with the asymptotic numerator attached
  kTheorem2,         // Lai's UCB, numerator 2 L(T' gamma^2) + 1 + eps
  kLaiRobbinsLower,  // asymptotic information lower bound (reference line)
  kAuerUpper,        // classic alpha = 2 bound for [0,1] rewards (context line)
};

const char* bound_kind_name(BoundKind kind);

struct PerArmBound {
  std::size_t arm = 0;
  double delta = 0.0;   // mu* - mu_a
  double gamma = 0.0;   // delta / sigma
  double leading_term = 0.0;
  double correction_term = 0.0;
  double total = 0.0;
};

struct BoundReport {
  BoundKind kind = BoundKind::kTheorem1;
  std::vector<PerArmBound> per_arm;  // suboptimal arms only
  double grand_total = 0.0;
  // Corollary2 only: 2 log T' - 3 log log T' - log pi + 1, reported alongside
  // the rigorous numerator for comparison.
  std::optional<double> expansion_numerator;
};

enum class PhiStarMethod { kClosedForm, kNumericIntegral };

// Upper bound on the size of the repeated significance test
//   Phi*(-b, T') = P{ max_{1<=m<=T'} S_m / sqrt(m) >= b }.
// ClosedForm evaluates phi(b) (2 b log(e sqrt(T')) + sqrt(2/pi) + 4/b).
// NumericIntegral evaluates the sharper pre-relaxation form
//   2 phi(b) [ b I1 + I2 ] + (2/b) phi(b),
//   I1 = int_0^inf min(sqrt(T'), 1/x) (Phi(b - xb) - Phi(-b - xb)) dx,
//   I2 = int_0^inf (phi(|b - theta|) - phi(b + theta)) / b dtheta,
// and is never above ClosedForm. Both are capped at 1.
double phi_star_upper(double b, std::int64_t t_prime, PhiStarMethod method);

// eta(b) = 4 T' Phi2(-b) + 3 (b^2 + 1) Phi*(-b, T'), using the
// NumericIntegral bound for Phi*.
double eta(double b, std::int64_t t_prime);

// c1(T') = 1 + eta(sqrt(2 log T')), T' >= 2.
double c1_of(std::int64_t t_prime);

// Per-arm sigma^2 (b^2 + 1 + eta(b)) / Delta_a over suboptimal arms. The
// level must have been built for the instance's T'. All-optimal instances
// produce an empty report with grand total 0.
BoundReport theorem1_bound(const sim::BanditInstance& instance,
                           const exploration::ExplorationLevel& level);

// theorem1_bound at b = sqrt(2 log T'), split as 2 log T' + c1(T').
BoundReport corollary1_bound(const sim::BanditInstance& instance);

// theorem1_bound at the argmin level for the given T' (the rigorous value),
// with the asymptotic numerator attached as annotation.
BoundReport corollary2_bound(const sim::BanditInstance& instance, std::int64_t t_prime);

// cbar(b) = E[(b^2/2 - (Z-b)^2) 1{Z > b'}] = (2b - b') phi(b') - (1 + b^2/2) Phi(-b')
// with b' = b (1 - 1/sqrt(2)); defined for b >= sqrt(2), max below 0.3487.
double cbar(double b);

// max of cbar over [b_lo, b_hi] (dense-grid scan; cbar is unimodal).
double cbar_max(double b_lo, double b_hi);

// max over y in [-eta_frac, 0] of cbar(bbar(gamma (1 + y))) for the given T'.
double cbar_a(double gamma, std::int64_t t_prime, double eta_frac);

// J(kappa, eta) = 4 int_0^eta [L_a(y) + 1/(L_a(y)+1) + (cbar_a - 1)/2] / (1-y)^3
//                 * min(1, 1.7068 / (kappa y^2)) dy,
// with L_a(y) = L(kappa (1-y)^2). (T', gamma) feed cbar_a.
double j_integral(double kappa, double eta_frac, std::int64_t t_prime, double gamma);

// Uniform cap on x P{the slowly-changing square-root boundary is crossed};
// used in place of the (unknown) exact c0(x).
inline constexpr double kC0Cap = 1.7068;

// eta_frac used in the Theorem2 correction term.
inline constexpr double kTheorem2EtaFrac = 0.573;

// kappa at and below which the correction falls back to its uniform cap.
inline constexpr double kTheorem2KappaCutoff = 20.47;

// Uniform cap on the Theorem2 correction eps.
inline constexpr double kTheorem2EpsCap = 14.8;

struct Theorem2PerArm {
  double kappa = 0.0;       // T' gamma^2
  double eps = 0.0;         // min(14.8, cbar_a + J + 1.7068/eta^2); 14.8 when kappa <= 20.47
  double big_l_value = 0.0; // L(kappa)
  double leading_term = 0.0;
  double correction_term = 0.0;
  double total = 0.0;       // sigma^2 (2 L(kappa) + 1 + eps) / Delta
};

Theorem2PerArm theorem2_per_arm(double gamma, double sigma, std::int64_t t_prime,
                                double eta_frac = kTheorem2EtaFrac);

BoundReport theorem2_bound(const sim::BanditInstance& instance);

// Sum_a 2 sigma_a^2 log T / Delta_a with each arm's true std; an asymptotic
// reference line, not a finite-T statement.
BoundReport lai_robbins_lower(const sim::BanditInstance& instance, std::int64_t horizon);

// 8 sum log T / Delta_a + (1 + pi^2/3) sum Delta_a (bounded-reward heritage;
// reported for context only).
BoundReport auer_bound(const sim::BanditInstance& instance, std::int64_t horizon);

}  // namespace ucb::bounds
