#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gdnls/fft.hpp"
#include "gdnls/grid.hpp"

namespace gdnls {

// Complex samples of a function on a Grid.  Value type: operations return new
// fields, nothing is mutated behind the caller's back.
class ComplexField {
public:
  explicit ComplexField(GridPtr grid)
      : grid_(std::move(grid)), v_(grid_->size(), complex{0.0, 0.0}) {}

  ComplexField(GridPtr grid, std::vector<complex> samples)
      : grid_(std::move(grid)), v_(std::move(samples)) {
    if (v_.size() != grid_->size())
      throw std::invalid_argument("ComplexField: sample count does not match grid");
  }

  // Evaluate f(x) at every node.
  template <class F>
  static ComplexField sample(const GridPtr& grid, F&& f) {
    std::vector<complex> v(grid->size());
    for (std::size_t j = 0; j < grid->size(); ++j) v[j] = complex(f(grid->node(j)));
    return ComplexField(grid, std::move(v));
  }

  const GridPtr& grid() const { return grid_; }
  std::size_t size() const { return v_.size(); }
  std::span<const complex> values() const { return v_; }
  std::span<complex> values() { return v_; }
  const complex& operator[](std::size_t j) const { return v_[j]; }
  complex& operator[](std::size_t j) { return v_[j]; }

  // Mode amplitudes c_k with u_j = sum_k c_k e^{2*pi*i*jk/n}; index k carries
  // the dual frequency grid()->freq(k).
  std::vector<complex> spectrum() const {
    auto c = fft(v_);
    const double scale = 1.0 / static_cast<double>(v_.size());
    for (auto& z : c) z *= scale;
    return c;
  }

  static ComplexField from_spectrum(const GridPtr& grid, std::vector<complex> c) {
    if (c.size() != grid->size())
      throw std::invalid_argument("ComplexField: spectrum size does not match grid");
    fft_inplace(c, true);
    const double n = static_cast<double>(c.size());
    for (auto& z : c) z *= n;
    return ComplexField(grid, std::move(c));
  }

  bool finite() const {
    for (const auto& z : v_)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& z : v_) m = std::max(m, std::abs(z));
    return m;
  }

private:
  GridPtr grid_;
  std::vector<complex> v_;
};

namespace detail {
inline void require_same_grid(const ComplexField& a, const ComplexField& b) {
  if (!a.grid()->compatible(*b.grid()))
    throw std::invalid_argument("field operation: mismatched grids");
}
}  // namespace detail

inline ComplexField operator+(const ComplexField& a, const ComplexField& b) {
  detail::require_same_grid(a, b);
  ComplexField r = a;
  for (std::size_t j = 0; j < r.size(); ++j) r[j] += b[j];
  return r;
}

inline ComplexField operator-(const ComplexField& a, const ComplexField& b) {
  detail::require_same_grid(a, b);
  ComplexField r = a;
  for (std::size_t j = 0; j < r.size(); ++j) r[j] -= b[j];
  return r;
}

inline ComplexField operator*(complex s, const ComplexField& a) {
  ComplexField r = a;
  for (std::size_t j = 0; j < r.size(); ++j) r[j] *= s;
  return r;
}

inline ComplexField operator*(double s, const ComplexField& a) { return complex{s, 0.0} * a; }

}  // namespace gdnls
