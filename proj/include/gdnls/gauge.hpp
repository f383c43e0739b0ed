#pragma once

#include <cmath>
#include <vector>

#include "gdnls/field.hpp"
#include "gdnls/norms.hpp"

namespace gdnls {

// v(x) = u(x) exp( (i/2) int_{-inf}^x |u(y)|^2 dy ).
// The factor is unimodular, so |v| = |u| pointwise and every L^p norm of the
// modulus is preserved.  The integral runs from the left domain edge; for
// edge-decayed u the missing tail is a constant phase of negligible size.
inline ComplexField gauge_transform(const ComplexField& u, double edge_threshold = 1e-10) {
  if (u.max_abs() > 0.0) require_edge_decay(u, edge_threshold);
  const Grid& g = *u.grid();
  std::vector<double> density(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) density[j] = std::norm(u[j]);
  const std::vector<double> cum = cumulative_integral(g, density);
  ComplexField v = u;
  for (std::size_t j = 0; j < v.size(); ++j) v[j] *= std::polar(1.0, 0.5 * cum[j]);
  return v;
}

}  // namespace gdnls
