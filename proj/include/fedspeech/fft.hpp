#pragma once

#include <complex>
#include <vector>

#include "fedspeech/error.hpp"

namespace fedspeech {

inline bool is_power_of_two(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// In-place iterative radix-2 Cooley-Tukey. Length must be a power of two.
inline void fft_radix2(std::vector<std::complex<double>>& a) {
  const size_t n = a.size();
  if (!is_power_of_two(n)) throw ConfigError("FFT length must be a power of two");
  // bit reversal
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  const double two_pi = 6.283185307179586476925286766559;
  for (size_t len = 2; len <= n; len <<= 1) {
    double ang = -two_pi / static_cast<double>(len);
    std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (size_t k = 0; k < len / 2; ++k) {
        std::complex<double> u = a[i + k];
        std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

// One-sided spectrum of a real frame: bins 0 .. n/2 inclusive.
inline std::vector<std::complex<double>> rfft(const std::vector<double>& frame) {
  std::vector<std::complex<double>> a(frame.size());
  for (size_t i = 0; i < frame.size(); ++i) a[i] = {frame[i], 0.0};
  fft_radix2(a);
  a.resize(frame.size() / 2 + 1);
  return a;
}

}  // namespace fedspeech
