#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "gdnls/corpus.hpp"
#include "gdnls/field.hpp"
#include "gdnls/multiplier.hpp"
#include "gdnls/norms.hpp"
#include "helpers.hpp"

using namespace gdnls;
using Catch::Approx;

namespace {
double rel_l2_diff(const ComplexField& a, const ComplexField& b) {
  const double den = std::max(l2_norm(a), l2_norm(b));
  return den == 0.0 ? l2_norm(a - b) : l2_norm(a - b) / den;
}
}  // namespace

TEST_CASE("grid invariants") {
  auto g = Grid::make(2.0 * std::numbers::pi, 64);
  CHECK(g->spacing() * static_cast<double>(g->size()) == Approx(g->length()).epsilon(1e-15));
  CHECK(g->node(0) == Approx(-std::numbers::pi));
  // frequency symmetry: every nonzero frequency has its negative, except Nyquist
  for (std::size_t k = 1; k < g->size(); ++k) {
    if (k == g->nyquist_index()) continue;
    CHECK(g->freq(k) == Approx(-g->freq(g->size() - k)));
  }
  CHECK_THROWS_AS(Grid::make(10.0, 48), std::invalid_argument);   // not a power of two
  CHECK_THROWS_AS(Grid::make(10.0, 8), std::invalid_argument);    // too small
  CHECK_THROWS_AS(Grid::make(-1.0, 64), std::invalid_argument);
}

TEST_CASE("fft round trip and Parseval") {
  auto g = testutil::small_grid(1024);
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    ComplexField f = random_field(g, rng);
    ComplexField back = ComplexField::from_spectrum(g, f.spectrum());
    CHECK(rel_l2_diff(f, back) < 1e-12);

    // physical-space norm equals the spectral-space norm
    const auto c = f.spectrum();
    double spec = 0.0;
    for (const auto& z : c) spec += std::norm(z);
    spec = std::sqrt(spec * g->length());
    CHECK(l2_norm(f) == Approx(spec).epsilon(1e-12));
  }
}

TEST_CASE("multiplier single-mode eigenfunctions") {
  // D^s scales the fundamental sine by (2*pi/L)^s; with L = 2*pi it is fixed.
  auto g2pi = Grid::make(2.0 * std::numbers::pi, 128);
  auto f = ComplexField::sample(g2pi, [](double x) { return std::sin(x); });
  for (double s : {0.5, 1.0, 1.7}) {
    auto Ds = apply_multiplier(f, MultiplierSpec::riesz(s));
    CHECK(rel_l2_diff(Ds, f) < 1e-12);
  }
  auto gL = Grid::make(16.0, 256);
  auto fl = ComplexField::sample(gL, [&](double x) {
    return std::sin(2.0 * std::numbers::pi * x / 16.0);
  });
  const double scale = std::pow(2.0 * std::numbers::pi / 16.0, 0.75);
  auto Ds = apply_multiplier(fl, MultiplierSpec::riesz(0.75));
  CHECK(rel_l2_diff(Ds, scale * fl) < 1e-12);

  // propagator eigenfunction: a resolved plane wave picks up e^{-i xi0^2 t}
  const double xi0 = g2pi->freq(5);
  auto mode = ComplexField::sample(g2pi, [&](double x) { return std::polar(1.0, xi0 * x); });
  for (double t : {0.1, 1.0, 10.0}) {
    auto pt = free_evolve(mode, t);
    auto expect = std::polar(1.0, -xi0 * xi0 * t) * mode;
    CHECK(rel_l2_diff(pt, expect) < 1e-12);
  }
}

TEST_CASE("second derivative equals minus D^2") {
  auto g = testutil::small_grid(512);
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 10; ++rep) {
    ComplexField f = random_field(g, rng);
    auto dxx = derivative(f, 2);
    auto d2 = -1.0 * apply_multiplier(f, MultiplierSpec::riesz(2.0));
    CHECK(rel_l2_diff(dxx, d2) < 1e-12);
  }
}

TEST_CASE("identity multipliers and domain errors") {
  auto g = testutil::small_grid(256);
  std::mt19937_64 rng(3);
  ComplexField f = random_field(g, rng);
  CHECK(rel_l2_diff(apply_multiplier(f, MultiplierSpec::riesz(0.0)), f) < 1e-15);
  CHECK(rel_l2_diff(apply_multiplier(f, MultiplierSpec::bessel(0.0)), f) < 1e-13);
  CHECK(rel_l2_diff(free_evolve(f, 0.0), f) == 0.0);

  ComplexField bad = f;
  bad[3] = complex{std::numeric_limits<double>::quiet_NaN(), 0.0};
  CHECK_THROWS_AS(apply_multiplier(bad, MultiplierSpec::riesz(1.0)), std::invalid_argument);
  auto g2 = testutil::small_grid(512);
  CHECK_THROWS_AS(f + ComplexField(g2), std::invalid_argument);
}

TEST_CASE("propagator unitarity, group law, reversal, composition: 100 random fields") {
  auto g = testutil::small_grid(512);
  std::mt19937_64 rng(12345);
  for (int rep = 0; rep < 100; ++rep) {
    ComplexField f = random_field(g, rng);
    const double n0 = l2_norm(f);
    for (double t : {0.1, 1.0, 10.0})
      CHECK(std::abs(l2_norm(free_evolve(f, t)) - n0) < 1e-12 * n0);

    auto two_step = free_evolve(free_evolve(f, 0.3), 0.9);
    auto one_step = free_evolve(f, 1.2);
    CHECK(rel_l2_diff(two_step, one_step) < 1e-12);

    CHECK(rel_l2_diff(free_evolve(free_evolve(f, 0.7), -0.7), f) < 1e-12);

    auto ab = apply_multiplier(apply_multiplier(f, MultiplierSpec::riesz(0.6)),
                               MultiplierSpec::riesz(1.1));
    auto apb = apply_multiplier(f, MultiplierSpec::riesz(1.7));
    CHECK(rel_l2_diff(ab, apb) < 1e-12);
  }
}

TEST_CASE("J^s dominates D^s mode-wise") {
  auto g = testutil::small_grid(256);
  for (double s : {0.5, 1.0, 3.25}) {
    const auto dj = MultiplierSpec::bessel(s);
    const auto dr = MultiplierSpec::riesz(s);
    for (std::size_t k = 0; k < g->size(); ++k)
      CHECK(dj.value(g->freq(k)).real() >= dr.value(g->freq(k)).real());
  }
}

TEST_CASE("weighted norms") {
  auto g = testutil::default_grid();

  SECTION("zero field") {
    ComplexField z(g);
    CHECK(weighted_lp_norm(z, 3, Lp::two) == 0.0);
    CHECK(weighted_lp_norm(z, 3, Lp::inf) == 0.0);
  }

  SECTION("exact cancellation for 1/<x>^m") {
    for (int m : {1, 3, 5}) {
      auto f = ComplexField::sample(g, [&](double x) {
        return 1.0 / std::pow(1.0 + x * x, 0.5 * m);
      });
      CHECK(weighted_lp_norm(f, m, Lp::inf) == Approx(1.0).epsilon(1e-12));
      CHECK(weighted_infimum(f, m) == Approx(1.0).epsilon(1e-12));
    }
  }

  SECTION("Gaussian m=1 L2 against adaptive quadrature oracle") {
    auto f = ComplexField::sample(g, [](double x) { return std::exp(-x * x); });
    const double oracle = std::sqrt(testutil::integrate(
        [](double x) { return (1.0 + x * x) * std::exp(-2.0 * x * x); }, -40.0, 40.0, 1e-14));
    CHECK(weighted_lp_norm(f, 1, Lp::two) == Approx(oracle).margin(1e-8));
  }

  SECTION("infimum hits a zero") {
    auto f = ComplexField::sample(g, [](double x) { return std::sin(x); });
    // sin vanishes at x = 0, a grid node
    CHECK(weighted_infimum(f, 2) == 0.0);
  }
}

TEST_CASE("sobolev norm") {
  auto g = testutil::default_grid();
  std::mt19937_64 rng(99);

  SECTION("s = 0 equals L2") {
    ComplexField f = random_schwartz_field(g, rng);
    CHECK(sobolev_norm(f, 0.0) == Approx(l2_norm(f)).epsilon(1e-12));
  }

  SECTION("single mode closed form") {
    const double xi0 = g->freq(17);
    auto mode = ComplexField::sample(g, [&](double x) { return std::polar(1.0, xi0 * x); });
    const double expect = std::pow(1.0 + xi0 * xi0, 3.25) * std::sqrt(g->length());
    // s = 6.5 amplifies round-off leakage near Nyquist by (1+xi_max^2)^{s/2}
    CHECK(sobolev_norm(mode, 6.5) == Approx(expect).epsilon(1e-7));
    CHECK(sobolev_norm(mode, 1.0) ==
          Approx(std::sqrt(1.0 + xi0 * xi0) * std::sqrt(g->length())).epsilon(1e-12));
  }

  SECTION("Gaussian s=6.5 stable under grid doubling") {
    auto f = ComplexField::sample(g, [](double x) { return std::exp(-x * x); });
    auto g2 = testutil::default_grid(8192);
    auto f2 = ComplexField::sample(g2, [](double x) { return std::exp(-x * x); });
    const double a = sobolev_norm(f, 6.5), b = sobolev_norm(f2, 6.5);
    CHECK(std::abs(a - b) / b < 1e-8);
  }
}

TEST_CASE("cumulative integral against closed forms") {
  auto g = testutil::default_grid(2048);
  // integrand with known antiderivative on the whole line
  std::vector<double> samples(g->size());
  for (std::size_t j = 0; j < g->size(); ++j) {
    const double x = g->node(j);
    samples[j] = 1.0 / std::pow(1.0 + x * x, 1.5);
  }
  const auto cum = cumulative_integral(*g, samples);
  auto anti = [](double x) { return x / std::sqrt(1.0 + x * x); };
  for (std::size_t j = 0; j < g->size(); j += 97) {
    const double expect = anti(g->node(j)) - anti(g->node(0));
    CHECK(cum[j] == Approx(expect).margin(5e-6));  // whole-line tails are outside the domain
  }
  // spectral and trapezoid antiderivatives agree at second order
  const auto trap = cumulative_trapezoid(*g, samples);
  for (std::size_t j = 0; j < g->size(); j += 211)
    CHECK(cum[j] == Approx(trap[j]).margin(1e-5));
}

TEST_CASE("commutation identity for the free flow") {
  auto g = testutil::default_grid();
  auto f = ComplexField::sample(g, [](double x) { return std::exp(-26.0 * x * x); });

  SECTION("t = 0 collapses to x^m") {
    CHECK(commutation_residual(f, 0.0, 1) < 1e-12);
    CHECK(commutation_residual(f, 0.0, 3) < 1e-12);
  }

  SECTION("m = 1 and m = 3 residuals at n = 4096 and refinement") {
    const double r1 = commutation_residual(f, 0.5, 1);
    const double r3 = commutation_residual(f, 0.5, 3);
    CHECK(r1 <= 1e-8);
    CHECK(r3 <= 1e-6);

    auto g2 = testutil::default_grid(8192);
    auto f2 = ComplexField::sample(g2, [](double x) { return std::exp(-26.0 * x * x); });
    CHECK(commutation_residual(f2, 0.5, 1) <= r1 / 4.0);
    CHECK(commutation_residual(f2, 0.5, 3) <= r3 / 4.0);
  }

  SECTION("edge decay is enforced") {
    auto wide = ComplexField::sample(g, [](double x) { return std::exp(-x * x * 1e-4); });
    CHECK_THROWS_AS(commutation_residual(wide, 0.5, 1), EdgeDecayError);
  }
}
