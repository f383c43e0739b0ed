#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "gdnls/admissibility.hpp"
#include "gdnls/field.hpp"
#include "gdnls/multiplier.hpp"
#include "gdnls/norms.hpp"

namespace gdnls {

// One row of the norm ledger: every instantaneous quantity tracked along a
// trajectory.  wder[j-1] = ||<x>^m d^j u||_2.  tail_fraction is the share of
// the (k+1)-derivative's energy sitting in the top 1/8 of the spectrum; when
// it exceeds 1% the spectral derivative is not trustworthy and the row is
// flagged.
struct NormLedgerEntry {
  double t = 0.0;
  double sobolev_s = 0.0;
  double winf = 0.0;
  double wder[3] = {0.0, 0.0, 0.0};
  double inf_weighted = 0.0;
  double mass = 0.0;  // ||u||_2^2
  double energy = std::numeric_limits<double>::quiet_NaN();
  double linf = 0.0;
  double tail_fraction = 0.0;
  bool tail_flag = false;
};

// Instantaneous part of the contraction-ball norm: ||u||_{s,2} + ||<x>^m u||_inf
// + sum_j ||<x>^m d^j u||_2.
inline double entry_total(const NormLedgerEntry& e) {
  return e.sobolev_s + e.winf + e.wder[0] + e.wder[1] + e.wder[2];
}

// E(v) = 1/2 int |v_x|^2 + 1/4 Im int |v|^2 conj(v) v_x.
inline double energy(const ComplexField& v) {
  if (!v.finite()) throw std::invalid_argument("energy: non-finite field");
  const ComplexField vx = derivative(v, 1);
  double kinetic = 0.0, quartic = 0.0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    kinetic += std::norm(vx[j]);
    quartic += (std::norm(v[j]) * std::conj(v[j]) * vx[j]).imag();
  }
  const double dx = v.grid()->spacing();
  return 0.5 * kinetic * dx + 0.25 * quartic * dx;
}

inline NormLedgerEntry ledger_entry(const ComplexField& u, double t, double alpha,
                                    bool with_energy = false) {
  const int m = weight_exponent(alpha);
  const int k = derivative_index(alpha);
  NormLedgerEntry e;
  e.t = t;
  e.sobolev_s = sobolev_norm(u, sobolev_index(alpha));
  e.winf = weighted_lp_norm(u, m, Lp::inf);
  for (int j = 1; j <= 3; ++j) e.wder[j - 1] = weighted_lp_norm(derivative(u, j), m, Lp::two);
  e.inf_weighted = weighted_infimum(u, m);
  const double l2 = l2_norm(u);
  e.mass = l2 * l2;
  e.linf = linf_norm(u);
  if (with_energy) e.energy = energy(u);

  // spectral-tail share of the (k+1)-derivative
  std::vector<complex> a(u.values().begin(), u.values().end());
  fft_inplace(a);
  const Grid& g = *u.grid();
  double total = 0.0, tail = 0.0;
  const double cutoff = 0.875 * g.max_freq();
  for (std::size_t q = 0; q < a.size(); ++q) {
    const double xi = g.freq(q);
    const double en = std::norm(a[q]) * std::pow(std::abs(xi), 2.0 * (k + 1));
    total += en;
    if (std::abs(xi) >= cutoff) tail += en;
  }
  e.tail_fraction = total > 0.0 ? tail / total : 0.0;
  e.tail_flag = e.tail_fraction > 0.01;
  return e;
}

// ---- mixed smoothing norm ----------------------------------------------------

// ||d^{k+1} u||_{L^inf_x L^2_T} accumulated from sampled snapshots: per node,
// a running trapezoid of |d^{k+1}u|^2 in t; the norm is the max over nodes.
class MixedNormAccumulator {
public:
  explicit MixedNormAccumulator(int order) : order_(order) {}

  void add(double t, const ComplexField& u) {
    const ComplexField d = derivative(u, order_);
    std::vector<double> sq(d.size());
    for (std::size_t j = 0; j < d.size(); ++j) sq[j] = std::norm(d[j]);
    if (!sums_.empty()) {
      const double h = t - prev_t_;
      for (std::size_t j = 0; j < sq.size(); ++j)
        sums_[j] += 0.5 * h * (prev_sq_[j] + sq[j]);
    } else {
      sums_.assign(sq.size(), 0.0);
    }
    prev_sq_ = std::move(sq);
    prev_t_ = t;
    ++count_;
  }

  int samples() const { return count_; }

  double value() const {
    double mx = 0.0;
    for (double s : sums_) mx = std::max(mx, s);
    return std::sqrt(std::max(mx, 0.0));
  }

private:
  int order_;
  int count_ = 0;
  double prev_t_ = 0.0;
  std::vector<double> prev_sq_;
  std::vector<double> sums_;
};

// Contraction-ball norm over a completed run: sup over samples of the
// instantaneous total plus the mixed smoothing component.
inline double triple_norm(const std::vector<NormLedgerEntry>& ledger, double mixed_component) {
  if (ledger.empty()) throw std::invalid_argument("triple_norm: empty ledger");
  double sup = 0.0;
  for (const auto& e : ledger) sup = std::max(sup, entry_total(e));
  return sup + mixed_component;
}

// ---- Kato smoothing ------------------------------------------------------------

// Half-derivative gain of the free flow.  lhs_smooth/rhs is bounded by a
// universal constant on the line; a single mode e^{i xi0 x} gives the exact
// ratio sqrt(|xi0| T / L).
struct SmoothingReport {
  double lhs_half = 0.0;    // ||D^{1/2} u||_{L^inf_T L^2_x}
  double lhs_smooth = 0.0;  // ||d/dx e^{itL} u0||_{L^inf_x L^2_T}
  double rhs = 0.0;         // ||D^{1/2} u0||_2
  double ratio = 0.0;       // lhs_smooth / rhs
};

inline SmoothingReport smoothing_report(const ComplexField& u0, double T, int nt) {
  if (u0.max_abs() == 0.0) throw std::invalid_argument("smoothing_report: zero datum");
  if (!(T > 0.0) || nt < 2) throw std::invalid_argument("smoothing_report: need T > 0, nt >= 2");
  SmoothingReport r;
  r.rhs = l2_norm(apply_multiplier(u0, MultiplierSpec::riesz(0.5)));
  MixedNormAccumulator acc(1);
  for (int i = 0; i <= nt; ++i) {
    const double t = T * static_cast<double>(i) / static_cast<double>(nt);
    const ComplexField ut = free_evolve(u0, t);
    acc.add(t, ut);
    r.lhs_half = std::max(r.lhs_half, l2_norm(apply_multiplier(ut, MultiplierSpec::riesz(0.5))));
  }
  r.lhs_smooth = acc.value();
  r.ratio = r.lhs_smooth / r.rhs;
  return r;
}

// ---- inequality probes -----------------------------------------------------------

struct InequalityCheck {
  double lhs = 0.0;
  double rhs = 0.0;  // constant-free right-hand side
  double ratio() const { return rhs > 0.0 ? lhs / rhs : (lhs > 0.0 ? std::numeric_limits<double>::infinity() : 0.0); }
};

// ||J^{ga}(<x>^{(1-g)b} f)||_2 vs ||<x>^b f||_2^{1-g} ||J^a f||_2^g.
inline InequalityCheck interpolation_check(const ComplexField& f, double a, double b,
                                           double gamma) {
  if (!(a > 0.0) || !(b > 0.0) || !(gamma > 0.0) || !(gamma < 1.0))
    throw std::invalid_argument("interpolation_check: need a, b > 0 and gamma in (0,1)");
  InequalityCheck c;
  c.lhs = l2_norm(apply_multiplier(weight_pow(f, (1.0 - gamma) * b),
                                   MultiplierSpec::bessel(gamma * a)));
  c.rhs = std::pow(l2_norm(weight_pow(f, b)), 1.0 - gamma) *
          std::pow(sobolev_norm(f, a), gamma);
  return c;
}

// ||<x>^k d^j f||_2^2 vs the integration-by-parts majorant; the three variants
// shift the weight between the two first-order factors.
inline InequalityCheck weighted_ibp_check(const ComplexField& f, int k, int j, int variant) {
  if (k < 1 || j < 1) throw std::invalid_argument("weighted_ibp_check: need j, k >= 1");
  if (variant < 1 || variant > 3) throw std::invalid_argument("weighted_ibp_check: variant in {1,2,3}");
  auto wnorm = [&](int weight, int order) {
    return l2_norm(weight_pow(derivative(f, order), static_cast<double>(weight)));
  };
  InequalityCheck c;
  const double lhs = wnorm(k, j);
  c.lhs = lhs * lhs;
  const double base = wnorm(k - 1, j - 1);
  switch (variant) {
    case 1: c.rhs = wnorm(k, j + 1) * wnorm(k, j - 1) + base * base; break;
    case 2: c.rhs = wnorm(k - 1, j + 1) * wnorm(k + 1, j - 1) + base * base; break;
    default: c.rhs = wnorm(k + 1, j + 1) * wnorm(k - 1, j - 1) + base * base; break;
  }
  return c;
}

// ---- ball monitor ----------------------------------------------------------------

// Tracks the two membership conditions of the contraction ball along a run:
// instantaneous total <= 2*delta0 and inf <x>^m |u| >= lambda/4.
struct BallVerdict {
  bool config_ok = true;       // lambda must be positive for the bound to mean anything
  bool exited = false;
  double first_ball_exit = std::numeric_limits<double>::quiet_NaN();
  double first_lower_exit = std::numeric_limits<double>::quiet_NaN();
  double first_exit_time = std::numeric_limits<double>::quiet_NaN();
};

inline BallVerdict ball_monitor(const std::vector<NormLedgerEntry>& ledger, double lambda,
                                double delta0) {
  BallVerdict v;
  if (!(lambda > 0.0)) {
    v.config_ok = false;
    v.exited = true;
    v.first_exit_time = ledger.empty() ? 0.0 : ledger.front().t;
    return v;
  }
  for (const auto& e : ledger) {
    if (std::isnan(v.first_ball_exit) && entry_total(e) > 2.0 * delta0) v.first_ball_exit = e.t;
    if (std::isnan(v.first_lower_exit) && e.inf_weighted < 0.25 * lambda) v.first_lower_exit = e.t;
  }
  v.exited = !std::isnan(v.first_ball_exit) || !std::isnan(v.first_lower_exit);
  if (v.exited) {
    const double a = std::isnan(v.first_ball_exit) ? std::numeric_limits<double>::infinity()
                                                   : v.first_ball_exit;
    const double b = std::isnan(v.first_lower_exit) ? std::numeric_limits<double>::infinity()
                                                    : v.first_lower_exit;
    v.first_exit_time = std::min(a, b);
  }
  return v;
}

}  // namespace gdnls
