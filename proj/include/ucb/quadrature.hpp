#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace ucb {

namespace detail {

template <class F>
double simpson_rec(F& f, double a, double fa, double m, double fm, double b, double fb,
                   double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_rec(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Adaptive Simpson quadrature of f over [a, b] to the given absolute tolerance.
template <class F>
double adaptive_simpson(F&& f, double a, double b, double abs_tol, int max_depth = 48) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_rec(f, a, fa, m, fm, b, fb, whole, abs_tol, max_depth);
}

// Integrates f over consecutive segments [pts[i], pts[i+1]]; callers place
// integrand kinks on the segment boundaries.
template <class F>
double integrate_segments(F&& f, const std::vector<double>& pts, double abs_tol) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    total += adaptive_simpson(f, pts[i], pts[i + 1], abs_tol);
  }
  return total;
}

}  // namespace ucb
