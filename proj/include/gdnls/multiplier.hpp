#pragma once

#include <cmath>
#include <stdexcept>

#include "gdnls/field.hpp"

namespace gdnls {

// Diagonal Fourier operators: d^j/dx^j, the fractional powers D^s = (-d^2/dx^2)^{s/2}
// and J^s = (1 - d^2/dx^2)^{s/2}, and the free Schroedinger propagator e^{it d^2/dx^2}.
//
// Sign convention for the propagator: the symbol is e^{-i xi^2 t}, fixed by
// requiring that u(x,t) = e^{i(xi0 x - xi0^2 t)} solves du/dt = i d^2u/dx^2.
struct MultiplierSpec {
  enum class Kind { Derivative, RieszD, BesselJ, Propagator };

  Kind kind;
  double param;

  static MultiplierSpec derivative(int order) {
    if (order < 0) throw std::invalid_argument("derivative order must be >= 0");
    return {Kind::Derivative, static_cast<double>(order)};
  }
  static MultiplierSpec riesz(double s) {
    if (!(s >= 0.0)) throw std::invalid_argument("D^s requires s >= 0");
    return {Kind::RieszD, s};
  }
  static MultiplierSpec bessel(double s) {
    if (!std::isfinite(s)) throw std::invalid_argument("J^s requires finite s");
    return {Kind::BesselJ, s};
  }
  static MultiplierSpec propagator(double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("propagator requires finite t");
    return {Kind::Propagator, t};
  }

  complex value(double xi) const {
    switch (kind) {
      case Kind::Derivative: {
        // (i*xi)^j by repeated multiplication; j is small.
        const int j = static_cast<int>(param);
        complex m{1.0, 0.0};
        const complex ixi{0.0, xi};
        for (int r = 0; r < j; ++r) m *= ixi;
        return m;
      }
      case Kind::RieszD:
        if (param == 0.0) return {1.0, 0.0};
        if (xi == 0.0) return {0.0, 0.0};
        return {std::pow(std::abs(xi), param), 0.0};
      case Kind::BesselJ:
        return {std::pow(1.0 + xi * xi, 0.5 * param), 0.0};
      case Kind::Propagator:
        return std::polar(1.0, -xi * xi * param);
    }
    return {0.0, 0.0};
  }

  // Odd derivative orders zero the Nyquist mode so real fields stay real.
  bool zero_at_nyquist() const {
    return kind == Kind::Derivative && (static_cast<int>(param) % 2) == 1;
  }
};

inline ComplexField apply_multiplier(const ComplexField& f, const MultiplierSpec& spec) {
  if (!f.finite()) throw std::invalid_argument("apply_multiplier: non-finite input field");
  std::vector<complex> a(f.values().begin(), f.values().end());
  fft_inplace(a);
  const Grid& g = *f.grid();
  const std::size_t nyq = g.nyquist_index();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k == nyq && spec.zero_at_nyquist())
      a[k] = 0.0;
    else
      a[k] *= spec.value(g.freq(k));
  }
  fft_inplace(a, true);
  return ComplexField(f.grid(), std::move(a));
}

inline ComplexField derivative(const ComplexField& f, int order) {
  return apply_multiplier(f, MultiplierSpec::derivative(order));
}

// e^{it d^2/dx^2} f; t = 0 is the identity, bit-exactly.
inline ComplexField free_evolve(const ComplexField& f, double t) {
  if (t == 0.0) return f;
  return apply_multiplier(f, MultiplierSpec::propagator(t));
}

}  // namespace gdnls
