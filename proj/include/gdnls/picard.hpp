#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "gdnls/stepper.hpp"

namespace gdnls {

// Duhamel operator for the integral form of the equation:
//   Phi(u)(t) = e^{itL} u0 + int_0^t e^{i(t-t')L} N(u)(t') dt',  L = i d2/dx2,
// evaluated at every sample time of a uniformly sampled window trajectory.
// The integral is composite trapezoid in t'; the running integral is carried
// in spectral space so each quadrature node costs O(n) plus one transform
// per sample for the nonlinearity and one for the output.
inline std::vector<Snapshot> picard_apply_phi(const std::vector<Snapshot>& traj,
                                              const ComplexField& u0, const EquationSpec& eq,
                                              bool dealias = true) {
  if (traj.empty()) throw std::invalid_argument("picard_apply_phi: empty trajectory");
  const GridPtr& grid = u0.grid();
  const Grid& g = *grid;
  const std::size_t n = g.size();
  const std::size_t nt = traj.size();
  const double t0 = traj.front().t;
  const double h = nt > 1 ? (traj.back().t - t0) / static_cast<double>(nt - 1) : 0.0;

  std::vector<complex> u0_hat(u0.values().begin(), u0.values().end());
  fft_inplace(u0_hat);

  std::vector<complex> step_sym(n);
  for (std::size_t k = 0; k < n; ++k)
    step_sym[k] = std::polar(1.0, -g.freq(k) * g.freq(k) * h);

  std::vector<Snapshot> out;
  out.reserve(nt);

  std::vector<complex> run(n, complex{0.0, 0.0});  // spectral running integral
  std::vector<complex> prev_nl;
  for (std::size_t i = 0; i < nt; ++i) {
    std::vector<complex> nl_hat(n);
    {
      const ComplexField nl = nonlinearity(traj[i].u, eq, dealias);
      std::copy(nl.values().begin(), nl.values().end(), nl_hat.begin());
      fft_inplace(nl_hat);
    }
    if (i > 0) {
      for (std::size_t k = 0; k < n; ++k)
        run[k] = step_sym[k] * (run[k] + 0.5 * h * prev_nl[k]) + 0.5 * h * nl_hat[k];
    }
    const double dt_total = traj[i].t - t0;
    std::vector<complex> phi(n);
    for (std::size_t k = 0; k < n; ++k) {
      const complex p = std::polar(1.0, -g.freq(k) * g.freq(k) * dt_total);
      phi[k] = p * u0_hat[k] + run[k];
    }
    fft_inplace(phi, true);
    out.push_back({traj[i].t, ComplexField(grid, std::move(phi))});
    prev_nl = std::move(nl_hat);
  }
  return out;
}

namespace detail {

struct WindowResult {
  std::vector<Snapshot> traj;
  bool converged = false;
  int iterations = 0;
  std::vector<double> ratios;
};

// Fixed-point iteration u <- Phi(u) on one window, starting from the free
// evolution of the window datum.  The distance monitor is the sup over sample
// times of the L2 distance between consecutive iterates.
inline WindowResult picard_window(const ComplexField& u0, const EquationSpec& eq,
                                  double window, int substeps, int max_iters, double tol,
                                  bool dealias) {
  WindowResult w;
  const int nt = std::max(substeps, 1);
  w.traj.reserve(nt + 1);
  for (int i = 0; i <= nt; ++i) {
    const double t = window * static_cast<double>(i) / static_cast<double>(nt);
    w.traj.push_back({t, free_evolve(u0, t)});
  }

  double prev_dist = -1.0;
  int non_contracting = 0;
  for (int it = 0; it < max_iters; ++it) {
    std::vector<Snapshot> next = picard_apply_phi(w.traj, u0, eq, dealias);
    double dist = 0.0;
    for (std::size_t i = 0; i < next.size(); ++i) {
      if (!next[i].u.finite()) return w;  // treat blow-up of an iterate as non-convergence
      dist = std::max(dist, l2_norm(next[i].u - w.traj[i].u));
    }
    w.traj = std::move(next);
    ++w.iterations;
    if (prev_dist > 0.0) {
      const double ratio = dist / prev_dist;
      w.ratios.push_back(ratio);
      non_contracting = (ratio >= 1.0) ? non_contracting + 1 : 0;
      if (non_contracting >= 3) return w;
    }
    if (dist < tol) {
      w.converged = true;
      return w;
    }
    prev_dist = dist;
  }
  return w;
}

}  // namespace detail

// Picard iteration chained over windows of length cfg.picard.window.  When a
// window fails to contract, the window is halved and retried, up to
// max_halvings; running out of halvings is reported as contraction failure
// (meaningful output: the data is too large for this window), not a crash.
inline SolveResult solve_picard(const ComplexField& u0, const EquationSpec& eq,
                                const StepperConfig& cfg, const SampleHook& hook = {}) {
  eq.validate();
  const PicardConfig& pc = cfg.picard;
  if (!(pc.window > 0.0) || !(pc.contraction_tol > 0.0) || pc.substeps < 1 || pc.max_iters < 1)
    throw std::invalid_argument("solve_picard: invalid Picard configuration");
  if (cfg.t_end < 0.0) throw std::invalid_argument("solve_picard: t_end must be >= 0");

  SolveResult res;
  auto record = [&](double t, const ComplexField& u) {
    res.snapshots.push_back({t, u});
    if (hook) hook(t, u);
  };
  record(0.0, u0);
  if (cfg.t_end == 0.0) return res;

  double window = std::min(pc.window, cfg.t_end);
  int halvings = 0;
  ComplexField u = u0;
  double t = 0.0;
  const double peak0 = u0.max_abs();

  while (t < cfg.t_end - 1e-12 * cfg.t_end) {
    const double w_len = std::min(window, cfg.t_end - t);
    auto w = detail::picard_window(u, eq, w_len, pc.substeps, pc.max_iters,
                                   pc.contraction_tol, cfg.dealias);
    res.picard_iterations += w.iterations;
    for (double r : w.ratios) res.contraction_ratios.push_back(r);
    if (!w.converged) {
      if (++halvings > pc.max_halvings) {
        res.status = RunStatus::contraction_failed;
        res.diagnostic = "contraction failed";
        res.t_reached = t;
        return res;
      }
      window *= 0.5;
      continue;
    }
    res.certified_window = w_len;
    for (std::size_t i = 1; i < w.traj.size(); ++i) record(t + w.traj[i].t, w.traj[i].u);
    u = w.traj.back().u;
    t += w_len;
    res.t_reached = t;
    if (peak0 > 0.0 && u.max_abs() > cfg.escape_factor * peak0) {
      res.status = RunStatus::escaped;
      res.diagnostic = "amplitude escape";
      return res;
    }
  }
  return res;
}

// Scheme dispatcher.
inline SolveResult solve(const ComplexField& u0, const EquationSpec& eq,
                         const StepperConfig& cfg, const SampleHook& hook = {}) {
  if (!u0.finite()) throw std::invalid_argument("solve: non-finite initial datum");
  return cfg.scheme == Scheme::picard ? solve_picard(u0, eq, cfg, hook)
                                      : solve_ifrk4(u0, eq, cfg, hook);
}

}  // namespace gdnls
