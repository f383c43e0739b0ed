#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gdnls {

using complex = std::complex<double>;

namespace detail {

inline constexpr bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Unit roots e^{-2*pi*i*k/n}, k < n/2, cached per transform size.
// thread_local keeps the cache per worker, so concurrent transforms never share state.
inline const std::vector<complex>& fft_twiddles(std::size_t n) {
  thread_local std::map<std::size_t, std::vector<complex>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    constexpr double two_pi = 6.283185307179586476925286766559;
    std::vector<complex> w(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k)
      w[k] = std::polar(1.0, -two_pi * static_cast<double>(k) / static_cast<double>(n));
    it = cache.emplace(n, std::move(w)).first;
  }
  return it->second;
}

}  // namespace detail

// In-place radix-2 Cooley-Tukey transform.
// Forward: X_k = sum_j x_j e^{-2*pi*i*jk/n}.  Inverse applies the conjugate
// kernel and the 1/n factor, so inverse(forward(x)) == x.
inline void fft_inplace(std::vector<complex>& a, bool inverse = false) {
  const std::size_t n = a.size();
  if (n <= 1) return;
  if (!detail::is_pow2(n)) throw std::invalid_argument("fft: size must be a power of two");

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  const auto& w = detail::fft_twiddles(n);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t blk = 0; blk < n; blk += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        complex tw = w[k * stride];
        if (inverse) tw = std::conj(tw);
        const complex odd = a[blk + k + len / 2] * tw;
        const complex even = a[blk + k];
        a[blk + k] = even + odd;
        a[blk + k + len / 2] = even - odd;
      }
    }
  }

  if (inverse) {
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& z : a) z *= scale;
  }
}

inline std::vector<complex> fft(std::vector<complex> a, bool inverse = false) {
  fft_inplace(a, inverse);
  return a;
}

}  // namespace gdnls
