#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gdnls/field.hpp"
#include "gdnls/norms.hpp"

namespace gdnls {

// Index bookkeeping for the small-data theory: the decay weight m, the
// derivative count k and the Sobolev index s are all functions of alpha.
inline int weight_exponent(double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("weight_exponent: alpha must be > 0");
  return static_cast<int>(std::floor(2.0 / alpha + 1.0));
}
inline int derivative_index(double alpha) { return weight_exponent(alpha) + 3; }
inline double sobolev_index(double alpha) { return derivative_index(alpha) + 0.5; }

// c0 / <x>^m with m = floor(2/alpha + 1): the canonical datum that satisfies
// the weighted lower bound with lambda = c0.
inline ComplexField admissible_datum(double alpha, double c0, const GridPtr& g) {
  if (!(c0 > 0.0)) throw std::invalid_argument("admissible_datum: c0 must be > 0");
  const int m = weight_exponent(alpha);
  return ComplexField::sample(g, [&](double x) {
    return c0 / std::pow(1.0 + x * x, 0.5 * m);
  });
}

struct AdmissibilityReport {
  double alpha = 0.0;
  int m = 0;
  int k = 0;
  double s = 0.0;
  double norm_sobolev = 0.0;        // ||u0||_{s,2}
  double norm_winf = 0.0;           // ||<x>^m u0||_inf
  double norm_wder[3] = {0, 0, 0};  // ||<x>^m d^j u0||_2, j = 1,2,3
  double delta_total = 0.0;         // sum of the five norms above
  double lambda = 0.0;              // inf <x>^m |u0|
  double mizohata_sup = 0.0;
  double delta_budget = 0.0;
  double edge_value = 0.0;          // |u0| at the boundary relative to peak (truncation gauge)
  bool admissible = false;
};

// Size of the worst line integral of Im(mu |u0|^alpha): on the line this is
// max - min of any antiderivative of the imaginary part of the coefficient.
inline double mizohata_functional(const ComplexField& u0, double alpha, complex mu) {
  const double im = mu.imag();
  if (im == 0.0) return 0.0;
  const Grid& g = *u0.grid();
  std::vector<double> b(u0.size());
  for (std::size_t j = 0; j < u0.size(); ++j)
    b[j] = im * std::pow(std::abs(u0[j]), alpha);
  const std::vector<double> cum = cumulative_trapezoid(g, b);
  const auto [mn, mx] = std::minmax_element(cum.begin(), cum.end());
  return *mx - *mn;
}

// Evaluates every hypothesis norm of the small-data theorem on a datum.
inline AdmissibilityReport check_admissibility(const ComplexField& u0, double alpha,
                                               double delta_budget, complex mu = {1.0, 0.0},
                                               double edge_threshold = 1e-10) {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw std::invalid_argument("check_admissibility: alpha must lie in (0, 1]");
  if (!u0.finite()) throw std::invalid_argument("check_admissibility: non-finite datum");
  if (u0.max_abs() > 0.0) require_edge_decay(u0, edge_threshold);

  AdmissibilityReport r;
  r.alpha = alpha;
  r.m = weight_exponent(alpha);
  r.k = derivative_index(alpha);
  r.s = sobolev_index(alpha);
  r.delta_budget = delta_budget;
  r.norm_sobolev = sobolev_norm(u0, r.s);
  r.norm_winf = weighted_lp_norm(u0, r.m, Lp::inf);
  for (int j = 1; j <= 3; ++j)
    r.norm_wder[j - 1] = weighted_lp_norm(derivative(u0, j), r.m, Lp::two);
  r.delta_total = r.norm_sobolev + r.norm_winf + r.norm_wder[0] + r.norm_wder[1] + r.norm_wder[2];
  r.lambda = weighted_infimum(u0, r.m);
  r.mizohata_sup = mizohata_functional(u0, alpha, mu);
  r.edge_value = edge_ratio(u0);
  r.admissible = (r.delta_total < delta_budget) && (r.lambda > 0.0);
  return r;
}

}  // namespace gdnls
