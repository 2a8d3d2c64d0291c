#include "sfwm/observables.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "sfwm/fft.hpp"
#include "sfwm/parallel.hpp"
#include "sfwm/rydberg.hpp"

namespace sfwm {

namespace {
constexpr double kPi = 3.14159265358979323846;

struct QuadratureContext {
  Mat5 rho0;
  Mat6 Dss, Das;
};

QuadratureContext make_context(const SystemParams& p) {
  QuadratureContext ctx;
  ctx.rho0 = solve_steady_state(p);
  ctx.Dss = stokes_quadrature_matrix(p, ctx.rho0);
  ctx.Das = antistokes_quadrature_matrix(p, ctx.rho0);
  return ctx;
}

struct PointResult {
  double b2, c2, fs, fas;
  C X;
};

PointResult eval_point(const SystemParams& p, const QuadratureContext& ctx,
                       double omega, int nz) {
  ResponseSet r = propagation_coefficients(p, ctx.rho0, omega);
  TransferSolution sol = noise_kernels(r, p.length, nz);
  double dz = nz > 1 ? sol.zgrid[1] - sol.zgrid[0] : 0.0;
  C fs = 0.0, fas = 0.0, xz = 0.0;
  for (int k = 0; k < nz; ++k) {
    double w = (k == 0 || k == nz - 1) ? 0.5 : 1.0;
    C as = 0.0, aas = 0.0, ax = 0.0;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        as += std::conj(sol.P[k][i]) * ctx.Dss(i, j) * sol.P[k][j];
        aas += sol.Q[k][i] * ctx.Das(i, j) * std::conj(sol.Q[k][j]);
        ax += sol.P[k][i] * ctx.Das(i, j) * std::conj(sol.Q[k][j]);
      }
    fs += w * dz * as;
    fas += w * dz * aas;
    xz += w * dz * ax;
  }
  PointResult out;
  out.b2 = std::norm(sol.bc.B);
  out.c2 = std::norm(sol.bc.Cc);
  out.fs = fs.real();
  out.fas = fas.real();
  out.X = xz + sol.bc.A * std::conj(sol.bc.Cc);
  return out;
}
}  // namespace

std::vector<double> uniform_grid(double lo, double hi, int count) {
  std::vector<double> g(count);
  double d = count > 1 ? (hi - lo) / (count - 1) : 0.0;
  for (int i = 0; i < count; ++i) g[i] = lo + i * d;
  return g;
}

std::vector<double> default_omega_grid(int n, double omega_max) {
  std::vector<double> g(n);
  double d = 2.0 * omega_max / n;
  for (int i = 0; i < n; ++i) g[i] = -omega_max + i * d;
  return g;
}

SpectralTable spectral_rates(const SystemParams& p,
                             const std::vector<double>& omega_grid, int nz,
                             int threads, double mask_budget) {
  QuadratureContext ctx = make_context(p);
  size_t n = omega_grid.size();
  SpectralTable t;
  t.omega = omega_grid;
  t.nz = nz;
  t.b2.assign(n, 0.0);
  t.c2.assign(n, 0.0);
  t.fs.assign(n, 0.0);
  t.fas.assign(n, 0.0);
  t.X.assign(n, C{0.0, 0.0});
  t.masked.assign(n, 0);
  std::atomic<size_t> masked_count{0};
  parallel_for(
      n,
      [&](size_t i) {
        try {
          PointResult r = eval_point(p, ctx, omega_grid[i], nz);
          t.b2[i] = r.b2;
          t.c2[i] = r.c2;
          t.fs[i] = r.fs;
          t.fas[i] = r.fas;
          t.X[i] = r.X;
        } catch (const SimError& e) {
          if (e.kind() != ErrKind::DenominatorVanishes &&
              e.kind() != ErrKind::SingularBoundary)
            throw;
          t.masked[i] = 1;
          masked_count.fetch_add(1);
        }
      },
      threads);
  if (masked_count.load() > mask_budget * double(n))
    throw SimError(ErrKind::DenominatorVanishes,
                   "more than the masked-point budget of the grid failed");
  return t;
}

namespace {
double integrate_over_omega(const std::vector<double>& f,
                            const std::vector<double>& omega) {
  size_t n = f.size();
  if (n < 2) return 0.0;
  double dw = omega[1] - omega[0];
  std::vector<double> weighted(f);
  weighted.front() *= 0.5;
  weighted.back() *= 0.5;
  return pairwise_sum(weighted.data(), n) * dw / (2.0 * kPi);
}
}  // namespace

RateBreakdown total_rates(const SpectralTable& spectral, double edge_tol) {
  for (const auto* arr : {&spectral.b2, &spectral.c2, &spectral.fs,
                          &spectral.fas}) {
    double peak = *std::max_element(arr->begin(), arr->end());
    double edge = std::max(arr->front(), arr->back());
    if (peak > 0.0 && edge > edge_tol * peak)
      throw SimError(ErrKind::GridTooNarrow,
                     "spectral density at the grid edge exceeds the "
                     "edge-to-peak tolerance");
  }
  RateBreakdown rb;
  rb.rs_d = integrate_over_omega(spectral.b2, spectral.omega);
  rb.ras_d = integrate_over_omega(spectral.c2, spectral.omega);
  rb.rs_f = integrate_over_omega(spectral.fs, spectral.omega);
  rb.ras_f = integrate_over_omega(spectral.fas, spectral.omega);
  rb.spectral = spectral;
  return rb;
}

C cross_spectrum(const SystemParams& p, double omega, int nz) {
  QuadratureContext ctx = make_context(p);
  return eval_point(p, ctx, omega, nz).X;
}

CorrelationResult correlation_g2(const SystemParams& p,
                                 const std::vector<double>& omega_grid,
                                 int nz, int threads) {
  SpectralTable t = spectral_rates(p, omega_grid, nz, threads);
  RateBreakdown rb = total_rates(t);
  double rs = rb.rs(), ras = rb.ras();
  if (rs * ras <= 1e-30)
    throw SimError(ErrKind::ZeroRateNormalization,
                   "medium emits no pairs; g2 undefined");

  size_t n = omega_grid.size();
  double dw = omega_grid[1] - omega_grid[0];
  double c = p.c_internal();
  double pref = (c > 0.0 ? p.length / c : 1.0) * dw / (2.0 * kPi);

  CorrelationResult out;
  out.rs = rs;
  out.ras = ras;
  out.tau.resize(n);
  out.phi.resize(n);
  double dtau = 2.0 * kPi / (double(n) * dw);
  if (is_pow2(n)) {
    std::vector<C> a(t.X.begin(), t.X.end());
    fft_pow2(a, false);  // sum_k X_k e^{-2 pi i jk / n}
    for (size_t j = 0; j < n; ++j) {
      double tau = j * dtau;
      C phase = std::exp(C(0.0, -omega_grid[0] * tau));
      out.tau[j] = tau;
      out.phi[j] = pref * phase * a[j];
    }
  } else {
    for (size_t j = 0; j < n; ++j) {
      double tau = j * dtau;
      C acc = 0.0;
      for (size_t k = 0; k < n; ++k)
        acc += t.X[k] * std::exp(C(0.0, -omega_grid[k] * tau));
      out.tau[j] = tau;
      out.phi[j] = pref * acc;
    }
  }
  out.g2.resize(n);
  for (size_t j = 0; j < n; ++j)
    out.g2[j] = 1.0 + std::norm(out.phi[j]) / (rs * ras);
  return out;
}

OscillationEstimate dominant_oscillation(const CorrelationResult& corr,
                                         double omega_ref) {
  size_t n = corr.tau.size();
  if (n < 16 || omega_ref <= 0.0) return {};
  size_t half = n / 2;  // the upper half aliases negative tau
  std::vector<double> y(half);
  double peak = 0.0;
  for (size_t i = 0; i < half; ++i) {
    y[i] = std::norm(corr.phi[i]);
    peak = std::max(peak, y[i]);
  }
  if (peak <= 0.0) return {};
  size_t last = 0;
  for (size_t i = 0; i < half; ++i)
    if (y[i] >= 1e-4 * peak) last = i;
  size_t m = last + 1;
  if (m < 16) return {};
  double dtau = corr.tau[1] - corr.tau[0];

  // zero-padded centered moving average over one reference period
  size_t w = std::max<size_t>(3, size_t((2.0 * kPi / omega_ref) / dtau));
  std::vector<double> env(m, 0.0);
  long off = long(w - 1) / 2;
  for (size_t i = 0; i < m; ++i) {
    double acc = 0.0;
    for (size_t k = 0; k < w; ++k) {
      long idx = long(i) + off - long(k);
      if (idx >= 0 && idx < long(m)) acc += y[idx];
    }
    env[i] = acc / double(w);
  }

  std::vector<double> r(m);
  for (size_t i = 0; i < m; ++i) {
    double e = std::max(env[i], 1e-300);
    double hann =
        m > 1 ? 0.5 - 0.5 * std::cos(2.0 * kPi * double(i) / double(m - 1))
              : 1.0;
    r[i] = (y[i] / e - 1.0) * hann;
  }

  // direct DFT; the window is small
  double bin = 2.0 * kPi / (double(m) * dtau);
  double best_f = 0.0, best_a = -1.0;
  for (size_t k = 1; k <= m / 2; ++k) {
    double f = bin * double(k);
    if (f <= 1.0) continue;
    C acc = 0.0;
    for (size_t i = 0; i < m; ++i)
      acc += r[i] * std::exp(C(0.0, -2.0 * kPi * double(k) * double(i) /
                                        double(m)));
    double a = std::abs(acc);
    if (a > best_a) {
      best_a = a;
      best_f = f;
    }
  }
  return {best_f, bin};
}

std::vector<DriveSweepRow> drive_sweep_rates(
    const SystemParams& p, const std::vector<double>& omega_d_grid,
    const std::vector<double>& omega_grid, int nz, int threads) {
  std::vector<DriveSweepRow> rows(omega_d_grid.size());
  for (size_t i = 0; i < omega_d_grid.size(); ++i) {
    SystemParams q = p;
    q.omega_d = C(omega_d_grid[i], 0.0);
    RateBreakdown rb =
        total_rates(spectral_rates(q, omega_grid, nz, threads));
    DriveSweepRow& row = rows[i];
    row.omega_d = omega_d_grid[i];
    row.rs_d = rb.rs_d;
    row.rs_f = rb.rs_f;
    row.ras_d = rb.ras_d;
    row.ras_f = rb.ras_f;
    if (std::norm(q.omega_d) > 0.0) {
      RydbergAssessment ra = assess_rydberg(q);
      row.occupancy = ra.occupancy;
      row.rydberg_valid = ra.valid;
    } else {
      row.occupancy = 0.0;
      row.rydberg_valid = true;
    }
  }
  return rows;
}

}  // namespace sfwm
