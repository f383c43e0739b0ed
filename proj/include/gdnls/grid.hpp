#pragma once

#include <cmath>
#include <cstddef>
#include <memory>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "gdnls/fft.hpp"

namespace gdnls {

// Uniform periodic grid on [-L/2, L/2) standing in for the real line.
// Node count is a power of two so every transform stays radix-2; validity of
// the whole-line interpretation rests on the data being small at the edges.
class Grid {
public:
  static std::shared_ptr<const Grid> make(double length, std::size_t n) {
    if (!(length > 0.0) || !std::isfinite(length))
      throw std::invalid_argument("Grid: length must be positive and finite");
    if (!detail::is_pow2(n) || n < 16)
      throw std::invalid_argument("Grid: node count must be a power of two >= 16");
    return std::shared_ptr<const Grid>(new Grid(length, n));
  }

  double length() const { return length_; }
  std::size_t size() const { return n_; }
  double spacing() const { return dx_; }

  // x_j = -L/2 + j*dx
  double node(std::size_t j) const { return nodes_[j]; }
  std::span<const double> nodes() const { return nodes_; }

  // xi_k = 2*pi*alias(k)/L with alias(k) in [-n/2, n/2)
  double freq(std::size_t k) const { return freqs_[k]; }
  std::span<const double> freqs() const { return freqs_; }
  std::size_t nyquist_index() const { return n_ / 2; }
  double max_freq() const { return std::numbers::pi * static_cast<double>(n_) / length_; }

  bool compatible(const Grid& other) const {
    return n_ == other.n_ && length_ == other.length_;
  }

private:
  Grid(double length, std::size_t n)
      : length_(length), dx_(length / static_cast<double>(n)), n_(n), nodes_(n), freqs_(n) {
    const double half = 0.5 * length_;
    for (std::size_t j = 0; j < n_; ++j)
      nodes_[j] = -half + dx_ * static_cast<double>(j);
    const double base = 2.0 * std::numbers::pi / length_;
    for (std::size_t k = 0; k < n_; ++k) {
      const auto alias = (k < n_ / 2) ? static_cast<std::ptrdiff_t>(k)
                                      : static_cast<std::ptrdiff_t>(k) - static_cast<std::ptrdiff_t>(n_);
      freqs_[k] = base * static_cast<double>(alias);
    }
  }

  double length_;
  double dx_;
  std::size_t n_;
  std::vector<double> nodes_;
  std::vector<double> freqs_;
};

using GridPtr = std::shared_ptr<const Grid>;

}  // namespace gdnls
