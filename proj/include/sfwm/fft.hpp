#pragma once
#include <complex>
#include <vector>

namespace sfwm {

// In-place iterative radix-2 FFT (forward: e^{-2 pi i k n / N}); N must be a
// power of two. Small and deterministic; grids in this project are always
// powers of two, so no general-length plan machinery is needed.
void fft_pow2(std::vector<std::complex<double>>& a, bool inverse = false);

inline bool is_pow2(size_t n) { return n > 0 && (n & (n - 1)) == 0; }

// Pairwise (cascade) summation: deterministic and accurate independent of
// how the values were produced.
double pairwise_sum(const double* v, size_t n);
std::complex<double> pairwise_sum(const std::complex<double>* v, size_t n);

}  // namespace sfwm
