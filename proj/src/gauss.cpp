#include "ucb/gauss.hpp"

#include <cmath>
#include <stdexcept>

namespace ucb::gauss {

namespace {

void require_finite(double x, const char* who) {
  if (!std::isfinite(x)) throw std::invalid_argument(std::string(who) + ": argument must be finite");
}

}  // namespace

double pdf(double x) {
  require_finite(x, "gauss::pdf");
  return kInvSqrt2Pi * std::exp(-0.5 * x * x);
}

double cdf(double x) {
  require_finite(x, "gauss::cdf");
  return 0.5 * std::erfc(-x / kSqrt2);
}

double phi2(double x) {
  require_finite(x, "gauss::phi2");
  return (1.0 + x * x) * cdf(x) + x * pdf(x);
}

double truncated_mean(double a, double c) {
  require_finite(a, "gauss::truncated_mean");
  require_finite(c, "gauss::truncated_mean");
  if (!(a < c)) throw std::invalid_argument("gauss::truncated_mean: requires a < c");
  // Window mass without cancellation: tail windows go through the small side
  // of the distribution, straddling windows add two nonnegative erf halves.
  // The expressions mirror exactly, so mean(-c, -a) == -mean(a, c) bit for bit.
  double mass;
  if (a >= 0.0) {
    mass = cdf(-a) - cdf(-c);
  } else if (c <= 0.0) {
    mass = cdf(c) - cdf(a);
  } else {
    mass = 0.5 * (std::erf(c / kSqrt2) + std::erf(-a / kSqrt2));
  }
  if (!(mass > 0.0)) throw std::domain_error("gauss::truncated_mean: window mass underflows to zero");
  return (pdf(a) - pdf(c)) / mass;
}

double kl(double mu1, double mu2, double sigma) {
  require_finite(mu1, "gauss::kl");
  require_finite(mu2, "gauss::kl");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("gauss::kl: sigma must be positive");
  }
  const double d = (mu1 - mu2) / sigma;
  return 0.5 * d * d;
}

}  // namespace ucb::gauss
