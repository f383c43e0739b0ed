#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "gdnls/field.hpp"

namespace gdnls {

// Deterministic random inputs for property suites.  Everything below draws
// through std::mt19937_64 with explicit uniform mapping, so a seed pins the
// corpus bit-for-bit on a given platform.

namespace detail {
inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  // 53-bit mantissa draw; avoids distribution-object implementation drift.
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}
}  // namespace detail

// Dense random field: independent uniform real/imaginary parts in [-1,1].
// No decay; meant for pure spectral-kernel identities.
inline ComplexField random_field(const GridPtr& g, std::mt19937_64& rng) {
  std::vector<complex> v(g->size());
  for (auto& z : v)
    z = complex{detail::uniform(rng, -1.0, 1.0), detail::uniform(rng, -1.0, 1.0)};
  return ComplexField(g, std::move(v));
}

// Smooth, rapidly decaying sample: modulated Gaussians and rational-decay
// bumps with randomized width, center, modulation and amplitude.  Centers and
// widths are kept conservative so every draw passes the edge-decay gate.
inline ComplexField random_schwartz_field(const GridPtr& g, std::mt19937_64& rng) {
  const int kind = static_cast<int>(rng() % 3);
  const double amp = detail::uniform(rng, 0.2, 1.5);
  const double x0 = detail::uniform(rng, -3.0, 3.0);
  if (kind == 2) {
    // <(x-x0)/w>^{-p} with p large enough to clear the edge threshold
    const double w = detail::uniform(rng, 0.6, 1.5);
    const double p = detail::uniform(rng, 6.5, 8.5);
    return ComplexField::sample(g, [&](double x) {
      const double y = (x - x0) / w;
      return amp * std::pow(1.0 + y * y, -0.5 * p);
    });
  }
  const double w = detail::uniform(rng, 0.4, 2.0);
  const double xi0 = (kind == 1) ? detail::uniform(rng, -4.0, 4.0) : 0.0;
  const double poly = (kind == 1) ? 0.0 : detail::uniform(rng, 0.0, 1.0);
  return ComplexField::sample(g, [&](double x) {
    const double y = x - x0;
    const double env = amp * (1.0 + poly * y) * std::exp(-y * y / (2.0 * w * w));
    return env * std::polar(1.0, xi0 * x);
  });
}

inline std::vector<ComplexField> schwartz_corpus(const GridPtr& g, int count,
                                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ComplexField> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(random_schwartz_field(g, rng));
  return out;
}

}  // namespace gdnls
