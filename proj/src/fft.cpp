#include "sfwm/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace sfwm {

void fft_pow2(std::vector<std::complex<double>>& a, bool inverse) {
  const size_t n = a.size();
  if (!is_pow2(n)) throw std::invalid_argument("fft_pow2: size not 2^k");
  // bit-reversal permutation
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  const double pi = 3.14159265358979323846;
  for (size_t len = 2; len <= n; len <<= 1) {
    double ang = 2.0 * pi / double(len) * (inverse ? 1.0 : -1.0);
    std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (size_t k = 0; k < len / 2; ++k) {
        std::complex<double> u = a[i + k];
        std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
  if (inverse)
    for (auto& x : a) x /= double(n);
}

namespace {
template <typename T>
T pairwise_impl(const T* v, size_t n) {
  if (n <= 8) {
    T s{};
    for (size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  size_t h = n / 2;
  return pairwise_impl(v, h) + pairwise_impl(v + h, n - h);
}
}  // namespace

double pairwise_sum(const double* v, size_t n) { return pairwise_impl(v, n); }
std::complex<double> pairwise_sum(const std::complex<double>* v, size_t n) {
  return pairwise_impl(v, n);
}

}  // namespace sfwm
