#include "ucb/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ucb/gauss.hpp"
#include "ucb/quadrature.hpp"

namespace ucb::bounds {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_t_prime(std::int64_t t_prime, std::int64_t min_value, const char* who) {
  if (t_prime < min_value) {
    throw std::invalid_argument(std::string(who) + ": T' too small");
  }
}

double closed_form_upper(double b, std::int64_t t_prime) {
  const double log_em = 1.0 + 0.5 * std::log(static_cast<double>(t_prime));
  return gauss::pdf(b) * (2.0 * b * log_em + std::sqrt(2.0 / kPi) + 4.0 / b);
}

double numeric_integral_upper(double b, std::int64_t t_prime) {
  const double sqrt_m = std::sqrt(static_cast<double>(t_prime));
  // Integrands are smooth between the breakpoints; the upper cutoffs sit where
  // the Gaussian factors are below 1e-16 of their peak.
  auto mass = [b](double x) { return gauss::cdf(b - x * b) - gauss::cdf(-b - x * b); };
  auto f1 = [&](double x) { return std::min(sqrt_m, 1.0 / x) * mass(x); };
  std::vector<double> pts1{0.0, 1.0 / sqrt_m, 1.0, 1.0 + 45.0 / b};
  pts1.erase(std::unique(pts1.begin(), pts1.end()), pts1.end());
  const double i1 = integrate_segments(f1, pts1, 1e-12);

  auto f2 = [b](double th) { return (gauss::pdf(std::abs(b - th)) - gauss::pdf(b + th)) / b; };
  const double i2 = integrate_segments(f2, {0.0, b, b + 45.0}, 1e-12);

  return 2.0 * gauss::pdf(b) * (b * i1 + i2) + (2.0 / b) * gauss::pdf(b);
}

PerArmBound make_entry(std::size_t arm, double delta, double sigma, double leading,
                       double correction) {
  PerArmBound e;
  e.arm = arm;
  e.delta = delta;
  e.gamma = delta / sigma;
  e.leading_term = leading;
  e.correction_term = correction;
  e.total = leading + correction;
  return e;
}

double finish_report(BoundReport& report) {
  double total = 0.0;
  for (const PerArmBound& e : report.per_arm) total += e.total;
  report.grand_total = total;
  return total;
}

}  // namespace

const char* bound_kind_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::kTheorem1: return "theorem1";
    case BoundKind::kCorollary1: return "corollary1";
    case BoundKind::kCorollary2: return "corollary2";
    case BoundKind::kTheorem2: return "theorem2";
    case BoundKind::kLaiRobbinsLower: return "lai_robbins_lower";
    case BoundKind::kAuerUpper: return "auer_upper";
  }
  return "unknown";
}

double phi_star_upper(double b, std::int64_t t_prime, PhiStarMethod method) {
  if (!(b > 0.0) || !std::isfinite(b)) {
    throw std::invalid_argument("bounds::phi_star_upper: requires b > 0");
  }
  require_t_prime(t_prime, 1, "bounds::phi_star_upper");
  const double v = method == PhiStarMethod::kClosedForm ? closed_form_upper(b, t_prime)
                                                        : numeric_integral_upper(b, t_prime);
  return std::min(1.0, v);
}

double eta(double b, std::int64_t t_prime) {
  return 4.0 * static_cast<double>(t_prime) * gauss::phi2(-b) +
         3.0 * (b * b + 1.0) * phi_star_upper(b, t_prime, PhiStarMethod::kNumericIntegral);
}

double c1_of(std::int64_t t_prime) {
  require_t_prime(t_prime, 2, "bounds::c1_of");
  return 1.0 + eta(std::sqrt(2.0 * std::log(static_cast<double>(t_prime))), t_prime);
}

BoundReport theorem1_bound(const sim::BanditInstance& instance,
                           const exploration::ExplorationLevel& level) {
  instance.validate();
  if (level.horizon_after_init != instance.t_prime()) {
    throw std::invalid_argument("bounds::theorem1_bound: level built for a different T'");
  }
  BoundReport report;
  report.kind = BoundKind::kTheorem1;
  const double b = level.b;
  const double numerator_leading = b * b;
  double numerator_correction = 0.0;
  bool have_suboptimal = false;
  for (std::size_t a = 0; a < instance.num_arms(); ++a) {
    if (instance.gap(a) > 0.0) have_suboptimal = true;
  }
  if (have_suboptimal) {
    numerator_correction = 1.0 + eta(b, instance.t_prime());
    const double s2 = instance.sigma * instance.sigma;
    for (std::size_t a = 0; a < instance.num_arms(); ++a) {
      const double delta = instance.gap(a);
      if (delta <= 0.0) continue;
      report.per_arm.push_back(make_entry(a, delta, instance.sigma,
                                          s2 * numerator_leading / delta,
                                          s2 * numerator_correction / delta));
    }
  }
  finish_report(report);
  return report;
}

BoundReport corollary1_bound(const sim::BanditInstance& instance) {
  instance.validate();
  require_t_prime(instance.t_prime(), 2, "bounds::corollary1_bound");
  BoundReport report = theorem1_bound(instance, exploration::sqrt_two_log_level(instance.t_prime()));
  report.kind = BoundKind::kCorollary1;
  return report;
}

BoundReport corollary2_bound(const sim::BanditInstance& instance, std::int64_t t_prime) {
  instance.validate();
  require_t_prime(t_prime, 3, "bounds::corollary2_bound");
  const exploration::ExplorationLevel level = exploration::argmin_eta_level(t_prime);
  const double b = level.b;
  const double numerator_correction = 1.0 + eta(b, t_prime);
  BoundReport report;
  report.kind = BoundKind::kCorollary2;
  const double s2 = instance.sigma * instance.sigma;
  for (std::size_t a = 0; a < instance.num_arms(); ++a) {
    const double delta = instance.gap(a);
    if (delta <= 0.0) continue;
    report.per_arm.push_back(make_entry(a, delta, instance.sigma, s2 * b * b / delta,
                                        s2 * numerator_correction / delta));
  }
  finish_report(report);
  const double tp = static_cast<double>(t_prime);
  report.expansion_numerator =
      2.0 * std::log(tp) - 3.0 * std::log(std::log(tp)) - std::log(kPi) + 1.0;
  return report;
}

double cbar(double b) {
  if (!(b >= gauss::kSqrt2)) {
    throw std::invalid_argument("bounds::cbar: requires b >= sqrt(2)");
  }
  const double bp = b * (1.0 - 1.0 / gauss::kSqrt2);
  return (2.0 * b - bp) * gauss::pdf(bp) - (1.0 + 0.5 * b * b) * gauss::cdf(-bp);
}

double cbar_max(double b_lo, double b_hi) {
  if (!(b_lo <= b_hi)) throw std::invalid_argument("bounds::cbar_max: empty interval");
  constexpr int kPoints = 4097;
  double best = cbar(b_lo);
  for (int i = 1; i < kPoints; ++i) {
    const double b = b_lo + (b_hi - b_lo) * static_cast<double>(i) / (kPoints - 1);
    best = std::max(best, cbar(b));
  }
  return best;
}

double cbar_a(double gamma, std::int64_t t_prime, double eta_frac) {
  if (!(eta_frac > 0.0 && eta_frac < 1.0)) {
    throw std::invalid_argument("bounds::cbar_a: eta_frac must lie in (0,1)");
  }
  // bbar is increasing in gamma, so the max over y in [-eta, 0] is a max of
  // the unimodal cbar over a b-interval.
  const double b_lo = exploration::xbar(gamma * (1.0 - eta_frac), t_prime).bbar;
  const double b_hi = exploration::xbar(gamma, t_prime).bbar;
  return cbar_max(b_lo, b_hi);
}

double j_integral(double kappa, double eta_frac, std::int64_t t_prime, double gamma) {
  if (!(kappa > 0.0)) throw std::invalid_argument("bounds::j_integral: requires kappa > 0");
  if (!(eta_frac > 0.0 && eta_frac < 1.0)) {
    throw std::invalid_argument("bounds::j_integral: eta_frac must lie in (0,1)");
  }
  const double ca = cbar_a(gamma, t_prime, eta_frac);
  auto integrand = [&](double y) {
    const double la = exploration::big_l(kappa * (1.0 - y) * (1.0 - y));
    const double numerator = la + 1.0 / (la + 1.0) + 0.5 * (ca - 1.0);
    const double damp = y > 0.0 ? std::min(1.0, kC0Cap / (kappa * y * y)) : 1.0;
    const double om = 1.0 - y;
    return numerator / (om * om * om) * damp;
  };
  // The min(...) kink sits at y0 = sqrt(1.7068/kappa).
  const double y0 = std::sqrt(kC0Cap / kappa);
  std::vector<double> pts{0.0};
  if (y0 < eta_frac) pts.push_back(y0);
  pts.push_back(eta_frac);
  return 4.0 * integrate_segments(integrand, pts, 1e-8);
}

Theorem2PerArm theorem2_per_arm(double gamma, double sigma, std::int64_t t_prime,
                                double eta_frac) {
  if (!(gamma > 0.0)) throw std::invalid_argument("bounds::theorem2_per_arm: requires gamma > 0");
  if (!(sigma > 0.0)) throw std::invalid_argument("bounds::theorem2_per_arm: requires sigma > 0");
  require_t_prime(t_prime, 1, "bounds::theorem2_per_arm");
  Theorem2PerArm out;
  out.kappa = static_cast<double>(t_prime) * gamma * gamma;
  out.big_l_value = exploration::big_l(out.kappa);
  if (out.kappa <= kTheorem2KappaCutoff) {
    out.eps = kTheorem2EpsCap;
  } else {
    const double raw = cbar_a(gamma, t_prime, eta_frac) +
                       j_integral(out.kappa, eta_frac, t_prime, gamma) +
                       kC0Cap / (eta_frac * eta_frac);
    out.eps = std::min(kTheorem2EpsCap, raw);
  }
  const double delta = sigma * gamma;
  const double s2 = sigma * sigma;
  out.leading_term = s2 * 2.0 * out.big_l_value / delta;
  out.correction_term = s2 * (1.0 + out.eps) / delta;
  out.total = out.leading_term + out.correction_term;
  return out;
}

BoundReport theorem2_bound(const sim::BanditInstance& instance) {
  instance.validate();
  BoundReport report;
  report.kind = BoundKind::kTheorem2;
  for (std::size_t a = 0; a < instance.num_arms(); ++a) {
    const double delta = instance.gap(a);
    if (delta <= 0.0) continue;
    const double gamma = delta / instance.sigma;
    const Theorem2PerArm t2 = theorem2_per_arm(gamma, instance.sigma, instance.t_prime());
    report.per_arm.push_back(
        make_entry(a, delta, instance.sigma, t2.leading_term, t2.correction_term));
  }
  finish_report(report);
  return report;
}

BoundReport lai_robbins_lower(const sim::BanditInstance& instance, std::int64_t horizon) {
  instance.validate();
  if (horizon < 1) throw std::invalid_argument("bounds::lai_robbins_lower: requires T >= 1");
  BoundReport report;
  report.kind = BoundKind::kLaiRobbinsLower;
  const double log_t = std::log(static_cast<double>(horizon));
  for (std::size_t a = 0; a < instance.num_arms(); ++a) {
    const double delta = instance.gap(a);
    if (delta <= 0.0) continue;
    const double sa = instance.stds[a];  // the information bound uses the true stds
    report.per_arm.push_back(
        make_entry(a, delta, instance.sigma, 2.0 * sa * sa * log_t / delta, 0.0));
  }
  finish_report(report);
  return report;
}

BoundReport auer_bound(const sim::BanditInstance& instance, std::int64_t horizon) {
  instance.validate();
  if (horizon < 1) throw std::invalid_argument("bounds::auer_bound: requires T >= 1");
  BoundReport report;
  report.kind = BoundKind::kAuerUpper;
  const double log_t = std::log(static_cast<double>(horizon));
  for (std::size_t a = 0; a < instance.num_arms(); ++a) {
    const double delta = instance.gap(a);
    if (delta <= 0.0) continue;
    report.per_arm.push_back(make_entry(a, delta, instance.sigma, 8.0 * log_t / delta,
                                        (1.0 + kPi * kPi / 3.0) * delta));
  }
  finish_report(report);
  return report;
}

}  // namespace ucb::bounds
