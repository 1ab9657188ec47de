#pragma once

namespace ucb::gauss {

inline constexpr double kInvSqrt2Pi = 0.398942280401432677940;
inline constexpr double kSqrt2 = 1.414213562373095048802;

// Standard normal density.
double pdf(double x);

// Standard normal distribution function. Evaluated through erfc so both tails
// keep full relative accuracy; the naive 1 - Phi(-x) route loses the upper
// tail to cancellation, which matters downstream where T' * Phi2(-b) mixes a
// huge factor with a tiny tail value.
double cdf(double x);

// Second partial moment E (Z + x)_+^2 = (1 + x^2) Phi(x) + x phi(x).
double phi2(double x);

// E[Z | a < Z < c] = (phi(a) - phi(c)) / (Phi(c) - Phi(a)), a < c.
// Throws std::domain_error when the window mass underflows to zero.
double truncated_mean(double a, double c);

// KL divergence between N(mu1, sigma^2) and N(mu2, sigma^2): (mu1-mu2)^2 / (2 sigma^2).
double kl(double mu1, double mu2, double sigma);

}  // namespace ucb::gauss
