#include "pfwave/detail/fft.hpp"

#include <numbers>
#include <stdexcept>
#include <utility>

namespace pfwave::detail {

void fft_radix2(std::vector<Complex>& data, bool inverse) {
  const size_t n = data.size();
  if (n == 0 || (n & (n - 1)) != 0) {
    throw std::invalid_argument("fft_radix2: size must be a power of two");
  }
  if (n == 1) return;

  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }

  // Twiddles come from a table built with std::polar at full precision; a
  // running-product recurrence drifts by ~1e-12 at the sizes used here.
  const double turn = (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(n);
  std::vector<Complex> twiddle(n / 2);
  for (size_t k = 0; k < n / 2; ++k) {
    twiddle[k] = std::polar(1.0, turn * static_cast<double>(k));
  }

  for (size_t len = 2; len <= n; len <<= 1) {
    const size_t half = len / 2;
    const size_t stride = n / len;
    for (size_t base = 0; base < n; base += len) {
      for (size_t k = 0; k < half; ++k) {
        const Complex v = data[base + k + half] * twiddle[k * stride];
        const Complex u = data[base + k];
        data[base + k] = u + v;
        data[base + k + half] = u - v;
      }
    }
  }

  if (inverse) {
    const double scale = 1.0 / static_cast<double>(n);
    for (Complex& z : data) z *= scale;
  }
}

}  // namespace pfwave::detail
