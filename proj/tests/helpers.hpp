#pragma once

// Shared test fixtures: reference quadrature (independent of the library's
// grid quadrature paths) and standard grids.

#include <cmath>
#include <functional>
#include <numbers>

#include "gdnls/grid.hpp"

namespace testutil {

inline gdnls::GridPtr default_grid(std::size_t n = 4096) {
  return gdnls::Grid::make(80.0 * std::numbers::pi, n);
}

inline gdnls::GridPtr small_grid(std::size_t n = 512) {
  return gdnls::Grid::make(80.0 * std::numbers::pi, n);
}

namespace detail {
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double fa, double fm, double fb, double whole, double tol,
                               int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}
}  // namespace detail

// Adaptive Simpson quadrature; independent reference for every norm oracle.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace testutil
