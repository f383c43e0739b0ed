#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gdnls/equation.hpp"
#include "gdnls/field.hpp"
#include "gdnls/multiplier.hpp"

namespace gdnls {

enum class Scheme { ifrk4, picard };

enum class RunStatus { completed, escaped, contraction_failed };

struct PicardConfig {
  int max_iters = 25;
  double contraction_tol = 1e-10;
  int substeps = 16;     // quadrature samples per window
  double window = 0.05;  // T_w
  int max_halvings = 6;  // window halvings allowed before giving up
};

struct StepperConfig {
  Scheme scheme = Scheme::ifrk4;
  double dt = 1e-3;
  double t_end = 1.0;
  PicardConfig picard;
  bool dealias = true;
  int sample_cadence = 10;      // hook/snapshot every this many steps
  double escape_factor = 1e3;   // |u|_inf threshold relative to the datum
};

struct Snapshot {
  double t;
  ComplexField u;
};

struct SolveResult {
  std::vector<Snapshot> snapshots;
  RunStatus status = RunStatus::completed;
  double t_reached = 0.0;
  int step_rejections = 0;
  int picard_iterations = 0;
  std::vector<double> contraction_ratios;
  double certified_window = 0.0;  // final Picard window length that contracted
  std::string diagnostic;
};

using SampleHook = std::function<void(double, const ComplexField&)>;

namespace detail {

// Half-step propagator spectrum e^{-i xi^2 h/2}, evaluated once per step size.
struct HalfPropagator {
  std::vector<complex> sym;
  explicit HalfPropagator(const Grid& g, double h) : sym(g.size()) {
    for (std::size_t k = 0; k < g.size(); ++k)
      sym[k] = std::polar(1.0, -g.freq(k) * g.freq(k) * 0.5 * h);
  }
  ComplexField operator()(const ComplexField& f) const {
    std::vector<complex> a(f.values().begin(), f.values().end());
    fft_inplace(a);
    for (std::size_t k = 0; k < a.size(); ++k) a[k] *= sym[k];
    fft_inplace(a, true);
    return ComplexField(f.grid(), std::move(a));
  }
};

// One classical RK4 step in the interaction picture w = e^{-tL}u, L = i d2/dx2.
// The linear flow is applied exactly through the propagator symbol, so the
// step reduces to the free evolution when the nonlinearity vanishes.
inline ComplexField ifrk4_step(const ComplexField& u, const EquationSpec& eq, double h,
                               bool dealias, const HalfPropagator& E) {
  const ComplexField k1 = nonlinearity(u, eq, dealias);
  const ComplexField u_half = E(u + (0.5 * h) * k1);
  const ComplexField k2 = nonlinearity(u_half, eq, dealias);
  const ComplexField e1u = E(u);
  const ComplexField k3 = nonlinearity(e1u + (0.5 * h) * k2, eq, dealias);
  const ComplexField e2u = E(e1u);
  const ComplexField k4 = nonlinearity(e2u + h * E(k3), eq, dealias);

  ComplexField acc = E(E(k1)) + k4;
  acc = acc + 2.0 * E(k2 + k3);
  return e2u + (h / 6.0) * acc;
}

}  // namespace detail

// Single step, with bounded recursive halving when an intermediate goes
// non-finite (the explicit stages have a CFL-like limit from the transport
// term).  rejections counts how many times the step had to split.
inline ComplexField step_ifrk4(const ComplexField& u, const EquationSpec& eq, double dt,
                               bool dealias = true, int* rejections = nullptr, int depth = 0) {
  const detail::HalfPropagator E(*u.grid(), dt);
  ComplexField next = detail::ifrk4_step(u, eq, dt, dealias, E);
  if (next.finite()) return next;
  if (depth >= 3)
    throw std::runtime_error("step_ifrk4: non-finite state persists after step halving");
  if (rejections) ++(*rejections);
  const ComplexField mid = step_ifrk4(u, eq, 0.5 * dt, dealias, rejections, depth + 1);
  return step_ifrk4(mid, eq, 0.5 * dt, dealias, rejections, depth + 1);
}

// Fixed-step integration to t_end (the time grid lands on t_end exactly).
// Hooks run at the sampling cadence and always at t = 0 and t = t_end.
// Escape detection: when |u|_inf exceeds escape_factor times its initial
// value the run halts and keeps what it has.
inline SolveResult solve_ifrk4(const ComplexField& u0, const EquationSpec& eq,
                               const StepperConfig& cfg, const SampleHook& hook = {}) {
  eq.validate();
  if (!(cfg.dt > 0.0)) throw std::invalid_argument("solve: dt must be > 0");
  if (cfg.t_end < 0.0) throw std::invalid_argument("solve: t_end must be >= 0");

  SolveResult res;
  const double peak0 = u0.max_abs();
  auto record = [&](double t, const ComplexField& u) {
    res.snapshots.push_back({t, u});
    if (hook) hook(t, u);
  };
  record(0.0, u0);
  res.t_reached = 0.0;
  if (cfg.t_end == 0.0) return res;

  const auto n_steps = static_cast<std::int64_t>(std::ceil(cfg.t_end / cfg.dt - 1e-12));
  const double h = cfg.t_end / static_cast<double>(n_steps);
  const detail::HalfPropagator E(*u0.grid(), h);
  ComplexField u = u0;
  for (std::int64_t i = 1; i <= n_steps; ++i) {
    try {
      ComplexField next = detail::ifrk4_step(u, eq, h, cfg.dealias, E);
      if (!next.finite()) {
        // rare path: split the step until the stages stay finite
        ++res.step_rejections;
        const ComplexField mid = step_ifrk4(u, eq, 0.5 * h, cfg.dealias, &res.step_rejections, 1);
        next = step_ifrk4(mid, eq, 0.5 * h, cfg.dealias, &res.step_rejections, 1);
      }
      u = std::move(next);
    } catch (const std::runtime_error&) {
      res.status = RunStatus::escaped;
      res.diagnostic = "non-finite state";
      return res;
    }
    const double t = cfg.t_end * static_cast<double>(i) / static_cast<double>(n_steps);
    res.t_reached = t;
    if (peak0 > 0.0 && u.max_abs() > cfg.escape_factor * peak0) {
      record(t, u);
      res.status = RunStatus::escaped;
      res.diagnostic = "amplitude escape";
      return res;
    }
    const bool sample = (cfg.sample_cadence > 0 && i % cfg.sample_cadence == 0) || i == n_steps;
    if (sample) record(t, u);
  }
  return res;
}

}  // namespace gdnls
