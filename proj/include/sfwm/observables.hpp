#pragma once
#include <cstdint>
#include <vector>

#include "sfwm/propagation.hpp"

namespace sfwm {

struct SpectralTable {
  std::vector<double> omega;
  std::vector<double> b2, c2;   // deterministic densities |B|^2, |C|^2
  std::vector<double> fs, fas;  // fluctuation densities (z-quadratures)
  std::vector<C> X;             // cross-spectrum integrand (pre-Fourier)
  std::vector<std::uint8_t> masked;
  int nz = 0;
};

struct RateBreakdown {
  double rs_d = 0, rs_f = 0, ras_d = 0, ras_f = 0;  // gamma31 units
  double rs() const { return rs_d + rs_f; }
  double ras() const { return ras_d + ras_f; }
  SpectralTable spectral;
};

struct CorrelationResult {
  std::vector<double> tau;  // 1/gamma31 units
  std::vector<C> phi;
  std::vector<double> g2;
  double rs = 0, ras = 0;
};

struct OscillationEstimate {
  double frequency = 0;  // dominant oscillation of |phi|^2
  double bin_width = 0;  // FFT bin of the estimate
};

struct DriveSweepRow {
  double omega_d;
  double rs_d, rs_f, ras_d, ras_f;
  double occupancy;
  bool rydberg_valid;
};

std::vector<double> uniform_grid(double lo, double hi, int count);
// n points over [-omega_max, omega_max), endpoint excluded (FFT friendly)
std::vector<double> default_omega_grid(int n = 4096, double omega_max = 16.0);

// Per-omega densities. Points where the closed form reports a vanishing
// denominator are masked; if more than `mask_budget` of the grid is masked
// the whole evaluation aborts.
SpectralTable spectral_rates(const SystemParams& p,
                             const std::vector<double>& omega_grid,
                             int nz = 256, int threads = 0,
                             double mask_budget = 0.01);

// Trapezoid integration, d omega / 2 pi. edge_tol is the maximum allowed
// edge-to-peak spectral density ratio before GridTooNarrow fires. The
// spectra have ~1/omega^2 wings, so demanding much less than ~1e-2 on a
// desk-scale window is not attainable; 1e-2 flags genuinely truncated grids.
RateBreakdown total_rates(const SpectralTable& spectral,
                          double edge_tol = 1e-2);

// Pre-Fourier cross-spectrum integrand at a single omega.
C cross_spectrum(const SystemParams& p, double omega, int nz = 256);

// phi(tau) = (L/c) int d omega / 2 pi e^{-i omega tau} X(omega) on the
// FFT-conjugate tau grid; g2 = 1 + |phi|^2 / (Rs Ras).
// Throws ZeroRateNormalization when Rs * Ras <= 1e-30.
CorrelationResult correlation_g2(const SystemParams& p,
                                 const std::vector<double>& omega_grid,
                                 int nz = 256, int threads = 0);

// Frozen extraction of the dominant |phi(tau)|^2 oscillation: restrict to
// the signal window (|phi|^2 >= 1e-4 of its peak, which cuts the
// spectral-truncation ringing floor), divide out a one-period moving
// average, Hann window, FFT, argmax above 1 gamma31. omega_ref sets the
// detrending period (the coupling Rabi frequency in practice).
OscillationEstimate dominant_oscillation(const CorrelationResult& corr,
                                         double omega_ref);

std::vector<DriveSweepRow> drive_sweep_rates(
    const SystemParams& p, const std::vector<double>& omega_d_grid,
    const std::vector<double>& omega_grid, int nz = 256, int threads = 0);

}  // namespace sfwm
