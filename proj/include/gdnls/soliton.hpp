#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gdnls/field.hpp"
#include "gdnls/norms.hpp"

namespace gdnls {

// Two-parameter solitary wave family of the derivative Schroedinger equations.
// The profile has two branches: the generic one (4*omega > c^2, sech-like) and
// the algebraic one on the boundary omega = c^2/4 with c > 0.
enum class SolitonBranch { generic, degenerate };

struct SolitonParams {
  double alpha = 1.0;
  double omega = 1.0;
  double speed = 0.0;  // c
  SolitonBranch branch = SolitonBranch::generic;

  static SolitonParams generic(double alpha, double omega, double c) {
    SolitonParams p{alpha, omega, c, SolitonBranch::generic};
    p.validate();
    return p;
  }
  // omega pinned to c^2/4.
  static SolitonParams degenerate(double alpha, double c) {
    SolitonParams p{alpha, c * c / 4.0, c, SolitonBranch::degenerate};
    p.validate();
    return p;
  }

  void validate() const {
    if (!(alpha > 0.0)) throw std::invalid_argument("soliton: alpha must be > 0");
    if (branch == SolitonBranch::generic) {
      if (!(4.0 * omega - speed * speed > 0.0))
        throw std::invalid_argument("soliton: generic branch requires 4*omega > c^2");
    } else {
      if (!(speed > 0.0))
        throw std::invalid_argument("soliton: degenerate branch requires c > 0");
      if (std::abs(omega - speed * speed / 4.0) > 1e-12 * std::max(1.0, std::abs(omega)))
        throw std::invalid_argument("soliton: degenerate branch requires omega = c^2/4");
    }
  }
};

// phi_{omega,c}(x), strictly positive, even in x when c = 0.  cosh overflow in
// the far tail drives the value to an exact 0 underflow, never NaN.
inline double soliton_profile_at(const SolitonParams& p, double x) {
  if (p.branch == SolitonBranch::degenerate) {
    const double cx = p.speed * x;
    const double den = 0.25 * p.alpha * p.alpha * cx * cx + 1.0;
    return std::pow((p.alpha + 2.0) * p.speed / den, 1.0 / p.alpha);
  }
  const double disc = 4.0 * p.omega - p.speed * p.speed;
  const double num = (2.0 + p.alpha) * disc;
  const double den = 4.0 * std::sqrt(p.omega) * std::cosh(0.5 * p.alpha * std::sqrt(disc) * x) -
                     2.0 * p.speed;
  const double ratio = num / den;  // den -> inf in the tail gives ratio -> +0
  return ratio > 0.0 ? std::pow(ratio, 1.0 / p.alpha) : 0.0;
}

inline ComplexField soliton_profile(const SolitonParams& p, const GridPtr& g) {
  p.validate();
  return ComplexField::sample(g, [&](double x) { return soliton_profile_at(p, x); });
}

namespace detail {

// Exact antiderivative of phi^alpha.  phi^alpha = A / (a*cosh(b y) + d) on the
// generic branch, which integrates to arctan form via u = tanh(b y / 2);
// the degenerate branch is a plain Lorentzian.
// Returns I(z) = int_{-inf}^z phi^alpha(y) dy.
inline double soliton_alpha_mass_below(const SolitonParams& p, double z) {
  if (p.branch == SolitonBranch::degenerate) {
    // phi^alpha = (alpha+2) c / ((alpha c z / 2)^2 + 1)
    const double q = 0.5 * p.alpha * p.speed;
    return (p.alpha + 2.0) * p.speed / q *
           (std::atan(q * z) + 0.5 * std::numbers::pi);
  }
  const double disc = 4.0 * p.omega - p.speed * p.speed;
  const double b = 0.5 * p.alpha * std::sqrt(disc);
  const double a = 4.0 * std::sqrt(p.omega);
  const double d = -2.0 * p.speed;
  // (a+d) and (a-d) are both positive on this branch.
  const double kappa = std::sqrt((a - d) / (a + d));
  const double pref = (2.0 + p.alpha) * disc * 2.0 / (b * std::sqrt((a + d) * (a - d)));
  return pref * (std::atan(kappa * std::tanh(0.5 * b * z)) + std::atan(kappa));
}

}  // namespace detail

// Mass of the phase integrand below the left domain edge at time t: the part
// of int_{-inf}^{x-ct} phi^alpha that cumulative quadrature over the grid
// cannot see.  Added back as a constant phase correction.
inline double soliton_phase_tail(const SolitonParams& p, const GridPtr& g, double t) {
  return detail::soliton_alpha_mass_below(p, g->node(0) - p.speed * t);
}

// psi_{omega,c}(x,t) = phi(x-ct) exp i{omega t + (c/2)(x-ct)
//                                     - 1/(alpha+2) int_{-inf}^{x-ct} phi^alpha}.
// The phase integral is cumulative spectral quadrature over the grid plus the
// exact left-tail mass.
inline ComplexField soliton_solution(const SolitonParams& p, const GridPtr& g, double t) {
  p.validate();
  const std::size_t n = g->size();
  std::vector<double> prof(n), prof_alpha(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double z = g->node(j) - p.speed * t;
    prof[j] = soliton_profile_at(p, z);
    prof_alpha[j] = std::pow(prof[j], p.alpha);
  }
  const std::vector<double> cum = cumulative_integral(*g, prof_alpha);
  const double tail = soliton_phase_tail(p, g, t);
  std::vector<complex> v(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double z = g->node(j) - p.speed * t;
    const double phase = p.omega * t + 0.5 * p.speed * z - (cum[j] + tail) / (p.alpha + 2.0);
    v[j] = prof[j] * std::polar(1.0, phase);
  }
  return ComplexField(g, std::move(v));
}

}  // namespace gdnls
