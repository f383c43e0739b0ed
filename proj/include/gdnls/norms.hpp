#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "gdnls/field.hpp"
#include "gdnls/multiplier.hpp"

namespace gdnls {

// <x> = (1+x^2)^{1/2}
inline double japanese_bracket(double x) { return std::sqrt(1.0 + x * x); }

enum class Lp { two, inf };

// L2 norm by the rectangle rule, which is spectrally accurate for smooth
// periodic integrands.
inline double l2_norm(const ComplexField& f) {
  double s = 0.0;
  for (const auto& z : f.values()) s += std::norm(z);
  return std::sqrt(s * f.grid()->spacing());
}

inline double linf_norm(const ComplexField& f) { return f.max_abs(); }

// <x>^p f with real exponent p (negative allowed).
inline ComplexField weight_pow(const ComplexField& f, double p) {
  ComplexField r = f;
  const Grid& g = *f.grid();
  for (std::size_t j = 0; j < r.size(); ++j)
    r[j] *= std::pow(1.0 + g.node(j) * g.node(j), 0.5 * p);
  return r;
}

// x^m f (plain power of the coordinate, not the bracket).
inline ComplexField coordinate_mul(const ComplexField& f, int m = 1) {
  ComplexField r = f;
  const Grid& g = *f.grid();
  for (std::size_t j = 0; j < r.size(); ++j) {
    double w = 1.0;
    for (int q = 0; q < m; ++q) w *= g.node(j);
    r[j] *= w;
  }
  return r;
}

// ||<x>^m f||_p for p in {2, inf}.
inline double weighted_lp_norm(const ComplexField& f, int m, Lp p) {
  if (m < 0) throw std::invalid_argument("weighted_lp_norm: m must be >= 0");
  const Grid& g = *f.grid();
  if (p == Lp::two) {
    double s = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) {
      const double w = std::pow(1.0 + g.node(j) * g.node(j), 0.5 * m);
      s += w * w * std::norm(f[j]);
    }
    return std::sqrt(s * g.spacing());
  }
  double mx = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double w = std::pow(1.0 + g.node(j) * g.node(j), 0.5 * m);
    mx = std::max(mx, w * std::abs(f[j]));
  }
  return mx;
}

// inf_j <x_j>^m |f(x_j)|
inline double weighted_infimum(const ComplexField& f, int m) {
  if (m < 0) throw std::invalid_argument("weighted_infimum: m must be >= 0");
  const Grid& g = *f.grid();
  double mn = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double w = std::pow(1.0 + g.node(j) * g.node(j), 0.5 * m);
    mn = std::min(mn, w * std::abs(f[j]));
  }
  return mn;
}

// ||f||_{s,2} = ||J^s f||_2
inline double sobolev_norm(const ComplexField& f, double s) {
  return l2_norm(apply_multiplier(f, MultiplierSpec::bessel(s)));
}

// ---- edge decay -------------------------------------------------------------

// Weighted norms and coordinate multipliers only mean something on the torus
// when the data has died out at the domain ends.
struct EdgeDecayError : std::runtime_error {
  explicit EdgeDecayError(const std::string& what) : std::runtime_error(what) {}
};

// |f| at the two extreme nodes relative to the peak amplitude.
inline double edge_ratio(const ComplexField& f) {
  const double peak = f.max_abs();
  if (peak == 0.0) return 0.0;
  const double e = std::max(std::abs(f[0]), std::abs(f[f.size() - 1]));
  return e / peak;
}

inline bool edge_decay_ok(const ComplexField& f, double rel_threshold = 1e-10) {
  return edge_ratio(f) <= rel_threshold;
}

inline void require_edge_decay(const ComplexField& f, double rel_threshold = 1e-10) {
  const double r = edge_ratio(f);
  if (r > rel_threshold)
    throw EdgeDecayError("field does not decay at the domain edges (edge/peak = " +
                         std::to_string(r) + ")");
}

// ---- cumulative integration --------------------------------------------------

// C_j ~ int_{x_0}^{x_j} g(y) dy for real samples g.  The mean mode integrates
// to a linear ramp; the oscillating part goes through division by i*xi.
// Spectrally accurate for smooth g that is small at the edges.
inline std::vector<double> cumulative_integral(const Grid& g, const std::vector<double>& samples) {
  if (samples.size() != g.size())
    throw std::invalid_argument("cumulative_integral: sample count does not match grid");
  const std::size_t n = g.size();
  std::vector<complex> a(n);
  for (std::size_t j = 0; j < n; ++j) a[j] = samples[j];
  fft_inplace(a);
  const double mean = a[0].real() / static_cast<double>(n);
  a[0] = 0.0;
  for (std::size_t k = 1; k < n; ++k) a[k] /= complex{0.0, g.freq(k)};
  fft_inplace(a, true);
  std::vector<double> c(n);
  const double p0 = a[0].real();
  for (std::size_t j = 0; j < n; ++j)
    c[j] = mean * (g.node(j) - g.node(0)) + (a[j].real() - p0);
  return c;
}

// Trapezoid variant, second-order; useful as an independent cross-check.
inline std::vector<double> cumulative_trapezoid(const Grid& g, const std::vector<double>& samples) {
  if (samples.size() != g.size())
    throw std::invalid_argument("cumulative_trapezoid: sample count does not match grid");
  std::vector<double> c(samples.size(), 0.0);
  for (std::size_t j = 1; j < samples.size(); ++j)
    c[j] = c[j - 1] + 0.5 * g.spacing() * (samples[j - 1] + samples[j]);
  return c;
}

// ---- commutation of x with the free flow ------------------------------------

// The Galilean vector field Gamma_t = x - 2it d/dx intertwines coordinate
// multiplication with the free flow:  x^m e^{itL} f = e^{itL} Gamma_t^m f.
// (The sign of the 2it term is tied to the propagator symbol e^{-i xi^2 t};
// on the Fourier side x acts as i d/dxi and picks up -2t*xi from the phase.)
// Returns the L2 norm of the discrete mismatch; for smooth decaying data it
// is pure discretization error and shrinks under grid refinement.
inline double commutation_residual(const ComplexField& f, double t, int m,
                                   double edge_threshold = 1e-10) {
  if (m < 0) throw std::invalid_argument("commutation_residual: m must be >= 0");
  require_edge_decay(f, edge_threshold);
  ComplexField lhs = free_evolve(f, t);
  lhs = coordinate_mul(lhs, m);
  ComplexField gamma = f;
  for (int r = 0; r < m; ++r)
    gamma = coordinate_mul(gamma, 1) - complex{0.0, 2.0 * t} * derivative(gamma, 1);
  const ComplexField rhs = free_evolve(gamma, t);
  return l2_norm(lhs - rhs);
}

}  // namespace gdnls
