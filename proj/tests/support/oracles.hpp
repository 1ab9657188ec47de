// Test-side numeric oracles, kept independent of the library's quadrature:
// fixed-grid composite Simpson with one Richardson step, and a plain midpoint
// rule. Accuracy is set by panel counts, not adaptivity.
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>

namespace oracle {

inline double std_normal_pdf(double x) {
  return 0.39894228040143267794 * std::exp(-0.5 * x * x);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        int panels = 32768) {
  auto simpson = [&](int n) {
    const double h = (b - a) / n;
    double acc = f(a) + f(b);
    for (int i = 1; i < n; ++i) acc += f(a + h * i) * ((i & 1) ? 4.0 : 2.0);
    return acc * h / 3.0;
  };
  const double coarse = simpson(panels / 2);
  const double fine = simpson(panels);
  return fine + (fine - coarse) / 15.0;
}

inline double midpoint(const std::function<double(double)>& f, double a, double b,
                       std::int64_t n) {
  const double h = (b - a) / static_cast<double>(n);
  double acc = 0.0;
  for (std::int64_t i = 0; i < n; ++i) {
    acc += f(a + (static_cast<double>(i) + 0.5) * h);
  }
  return acc * h;
}

// Quadrature of the defining integral of the second partial moment,
// int (z + x)_+^2 phi(z) dz over [max(-x, -40), 40].
inline double phi2(double x, int panels = 32768) {
  return integrate([x](double z) { const double s = z + x; return s * s * std_normal_pdf(z); },
                   std::max(-x, -40.0), 40.0, panels);
}

}  // namespace oracle
