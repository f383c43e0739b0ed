#pragma once

#include <cmath>
#include <stdexcept>

#include "gdnls/field.hpp"
#include "gdnls/multiplier.hpp"
#include "gdnls/norms.hpp"

namespace gdnls {

// du/dt = i d^2u/dx^2 + N(u) with
//   form A:  N(u) = mu |u|^alpha du/dx
//   form B:  N(u) = mu d/dx(|u|^alpha u)
enum class EquationForm { A, B };

struct EquationSpec {
  EquationForm form = EquationForm::A;
  double alpha = 1.0;
  complex mu{1.0, 0.0};

  // mu = 0 switches the nonlinearity off entirely (linear test hook).
  bool linear() const { return mu == complex{0.0, 0.0}; }

  void validate() const {
    if (!(alpha > 0.0)) throw std::invalid_argument("EquationSpec: alpha must be > 0");
    if (!linear() && std::abs(std::abs(mu) - 1.0) > 1e-14)
      throw std::invalid_argument("EquationSpec: |mu| must equal 1");
  }
};

namespace detail {

// Zero every mode with |alias| > n/3 (2/3-rule).  |u|^alpha is not polynomial
// for fractional alpha, so this is damage control rather than exact dealiasing.
inline void dealias_spectrum(std::vector<complex>& a, const Grid& g) {
  const std::size_t n = g.size();
  const std::size_t cut = n / 3;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t alias = (k < n / 2) ? k : n - k;
    if (alias > cut) a[k] = 0.0;
  }
}

}  // namespace detail

// Pointwise |u|^alpha; |u| = 0 maps to 0 for alpha > 0 (continuous extension),
// so zeros of u never produce NaN.
inline std::vector<double> modulus_alpha(const ComplexField& u, double alpha) {
  std::vector<double> w(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) {
    const double a = std::abs(u[j]);
    w[j] = (a == 0.0) ? 0.0 : std::pow(a, alpha);
  }
  return w;
}

inline ComplexField nonlinearity(const ComplexField& u, const EquationSpec& eq,
                                 bool dealias = true) {
  if (!u.finite()) throw std::invalid_argument("nonlinearity: non-finite field");
  const Grid& g = *u.grid();
  if (eq.linear()) return ComplexField(u.grid());

  const std::vector<double> mod = modulus_alpha(u, eq.alpha);
  std::vector<complex> a(g.size());
  if (eq.form == EquationForm::A) {
    const ComplexField du = derivative(u, 1);
    for (std::size_t j = 0; j < g.size(); ++j) a[j] = mod[j] * du[j];
    fft_inplace(a);
    if (dealias) detail::dealias_spectrum(a, g);
    fft_inplace(a, true);
  } else {
    for (std::size_t j = 0; j < g.size(); ++j) a[j] = mod[j] * u[j];
    fft_inplace(a);
    if (dealias) detail::dealias_spectrum(a, g);
    const std::size_t nyq = g.nyquist_index();
    for (std::size_t k = 0; k < g.size(); ++k)
      a[k] *= (k == nyq) ? complex{0.0, 0.0} : complex{0.0, g.freq(k)};
    fft_inplace(a, true);
  }
  ComplexField r(u.grid(), std::move(a));
  return eq.mu * r;
}

// Discrete residual of the defining relation at time t, using a centered
// difference in time and spectral derivatives in space:
//   || (u(t+dt) - u(t-dt)) / (2 dt) - i u_xx(t) - N(u(t)) ||_2.
// Small values certify that the triple (u_prev, u_mid, u_next) samples an
// actual solution; a generic field scores O(1).
inline double equation_residual(const ComplexField& u_prev, const ComplexField& u_mid,
                                const ComplexField& u_next, double dt_fd,
                                const EquationSpec& eq, bool dealias = true) {
  if (!(dt_fd > 0.0)) throw std::invalid_argument("equation_residual: dt_fd must be > 0");
  const ComplexField dudt = (1.0 / (2.0 * dt_fd)) * (u_next - u_prev);
  const ComplexField lin = complex{0.0, 1.0} * derivative(u_mid, 2);
  const ComplexField nl = nonlinearity(u_mid, eq, dealias);
  return l2_norm(dudt - lin - nl);
}

}  // namespace gdnls
