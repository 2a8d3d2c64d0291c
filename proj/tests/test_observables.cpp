#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "sfwm/fft.hpp"
#include "sfwm/observables.hpp"
#include "test_util.hpp"

using namespace sfwm;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("fft: matches a direct DFT and inverts cleanly") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  size_t n = 64;
  std::vector<C> x(n);
  for (auto& v : x) v = C(u(rng), u(rng));
  std::vector<C> a(x);
  fft_pow2(a, false);
  for (size_t j = 0; j < n; j += 7) {
    C want = 0.0;
    for (size_t k = 0; k < n; ++k)
      want += x[k] * std::exp(C(0.0, -2.0 * kPi * double(j * k) / double(n)));
    CHECK(std::abs(a[j] - want) < 1e-11);
  }
  fft_pow2(a, true);
  for (size_t k = 0; k < n; ++k) CHECK(std::abs(a[k] - x[k]) < 1e-12);
  CHECK(is_pow2(64));
  CHECK(!is_pow2(96));
}

TEST_CASE("pairwise sum matches accumulation") {
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> x(1234);
  for (auto& v : x) v = u(rng);
  double want = std::accumulate(x.begin(), x.end(), 0.0);
  CHECK(std::abs(pairwise_sum(x.data(), x.size()) - want) < 1e-10);
}

TEST_CASE("grids: uniform spacing, endpoint conventions") {
  auto g = uniform_grid(0.0, 1.0, 5);
  REQUIRE(g.size() == 5);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 1.0);
  CHECK(g[1] == doctest::Approx(0.25));
  auto w = default_omega_grid(8, 4.0);
  REQUIRE(w.size() == 8);
  CHECK(w.front() == -4.0);
  CHECK(w.back() == doctest::Approx(3.0));  // endpoint excluded
  CHECK(w[1] - w[0] == doctest::Approx(1.0));
}

TEST_CASE("spectral table matches a pointwise reassembly") {
  SystemParams p;
  std::vector<double> grid = {-2.0, 0.0, 3.0};
  int nz = 33;
  SpectralTable t = spectral_rates(p, grid, nz, 2);
  REQUIRE(t.omega == grid);
  Mat5 rho0 = solve_steady_state(p);
  Mat6 S = stokes_quadrature_matrix(p, rho0);
  Mat6 A = antistokes_quadrature_matrix(p, rho0);
  for (size_t i = 0; i < grid.size(); ++i) {
    CHECK(t.masked[i] == 0);
    ResponseSet r = propagation_coefficients(p, rho0, grid[i]);
    TransferSolution sol = noise_kernels(r, p.length, nz);
    double dz = sol.zgrid[1] - sol.zgrid[0];
    C fs = 0.0, fas = 0.0, xz = 0.0;
    for (int k = 0; k < nz; ++k) {
      double wq = (k == 0 || k == nz - 1) ? 0.5 : 1.0;
      for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
          fs += wq * dz * std::conj(sol.P[k][a]) * S(a, b) * sol.P[k][b];
          fas += wq * dz * sol.Q[k][a] * A(a, b) * std::conj(sol.Q[k][b]);
          xz += wq * dz * sol.P[k][a] * A(a, b) * std::conj(sol.Q[k][b]);
        }
    }
    CHECK(testutil::rel_err(t.fs[i], fs.real()) < 1e-12);
    CHECK(testutil::rel_err(t.fas[i], fas.real()) < 1e-12);
    CHECK(testutil::rel_err(t.b2[i], std::norm(sol.bc.B)) < 1e-12);
    CHECK(testutil::rel_err(t.c2[i], std::norm(sol.bc.Cc)) < 1e-12);
    C X = xz + sol.bc.A * std::conj(sol.bc.Cc);
    CHECK(std::abs(t.X[i] - X) < 1e-12 * std::abs(X));
    // spectral densities are nonnegative
    CHECK(t.fs[i] >= 0.0);
    CHECK(t.fas[i] >= 0.0);
  }
}

TEST_CASE("total rates: trapezoid oracle and edge guard") {
  // synthetic gaussian table with known integral
  int n = 401;
  SpectralTable t;
  t.omega = uniform_grid(-10.0, 10.0, n);
  t.b2.resize(n);
  t.c2.resize(n);
  t.fs.resize(n);
  t.fas.resize(n);
  t.X.assign(n, C{0.0, 0.0});
  t.masked.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    double w = t.omega[i];
    double g = std::exp(-w * w / 2.0);
    t.b2[i] = g;
    t.c2[i] = 2.0 * g;
    t.fs[i] = 0.5 * g;
    t.fas[i] = g;
  }
  RateBreakdown rb = total_rates(t);
  double want = std::sqrt(2.0 * kPi) / (2.0 * kPi);  // int g / 2pi
  CHECK(testutil::rel_err(rb.rs_d, want) < 1e-6);
  CHECK(testutil::rel_err(rb.ras_d, 2.0 * want) < 1e-6);
  CHECK(testutil::rel_err(rb.rs_f, 0.5 * want) < 1e-6);
  CHECK(testutil::rel_err(rb.ras_f, want) < 1e-6);
  CHECK(rb.rs() == rb.rs_d + rb.rs_f);

  // narrow the window until the edge density is no longer negligible
  SpectralTable narrow = t;
  narrow.omega = uniform_grid(-2.0, 2.0, n);
  for (int i = 0; i < n; ++i) {
    double w = narrow.omega[i];
    narrow.b2[i] = std::exp(-w * w / 2.0);
  }
  CHECK_THROWS_AS(total_rates(narrow), SimError);
  try {
    total_rates(narrow);
  } catch (const SimError& e) {
    CHECK(e.kind() == ErrKind::GridTooNarrow);
  }
}

TEST_CASE("figure operating point: edge guard passes on the default window") {
  SystemParams p;
  auto grid = default_omega_grid(256, 16.0);
  SpectralTable t = spectral_rates(p, grid, 65, 0);
  RateBreakdown rb = total_rates(t);
  CHECK(rb.rs() > 0.0);
  CHECK(rb.ras() > 0.0);
  // a much stricter edge demand is not satisfiable on this window
  CHECK_THROWS_AS(total_rates(t, 1e-6), SimError);
}

TEST_CASE("correlation: FFT path equals the direct Fourier sum") {
  SystemParams p;
  auto grid = default_omega_grid(128, 16.0);
  int nz = 33;
  CorrelationResult corr = correlation_g2(p, grid, nz, 2);
  REQUIRE(corr.tau.size() == grid.size());
  SpectralTable t = spectral_rates(p, grid, nz, 2);
  double dw = grid[1] - grid[0];
  double pref = (p.length / p.c_internal()) * dw / (2.0 * kPi);
  for (size_t j = 0; j < grid.size(); j += 13) {
    C want = 0.0;
    for (size_t k = 0; k < grid.size(); ++k)
      want += t.X[k] * std::exp(C(0.0, -grid[k] * corr.tau[j]));
    want *= pref;
    CHECK(std::abs(corr.phi[j] - want) <
          1e-10 * std::max(1e-12, std::abs(want)) + 1e-18);
  }
  for (size_t j = 0; j < grid.size(); ++j) {
    double want_g2 = 1.0 + std::norm(corr.phi[j]) / (corr.rs * corr.ras);
    CHECK(corr.g2[j] == doctest::Approx(want_g2).epsilon(1e-12));
  }
}

TEST_CASE("an empty cell emits nothing and g2 refuses to normalize") {
  SystemParams p;
  p.density = 0.0;  // optical depth zero: every coefficient vanishes
  auto grid = default_omega_grid(32, 16.0);
  CHECK_THROWS_AS(correlation_g2(p, grid, 17), SimError);
  try {
    correlation_g2(p, grid, 17);
  } catch (const SimError& e) {
    CHECK(e.kind() == ErrKind::ZeroRateNormalization);
    CHECK(e.exit_code() == 4);
  }
}

TEST_CASE("dominant oscillation recovered from a synthetic correlation") {
  size_t n = 2048;
  double dtau = 0.05;
  double f0 = 3.0;
  CorrelationResult corr;
  corr.rs = corr.ras = 1.0;
  corr.tau.resize(n);
  corr.phi.resize(n);
  corr.g2.assign(n, 1.0);
  for (size_t i = 0; i < n; ++i) {
    double tau = i * dtau;
    corr.tau[i] = tau;
    double y = std::exp(-tau / 3.0) * (1.0 + 0.5 * std::cos(f0 * tau));
    corr.phi[i] = std::sqrt(y);
  }
  OscillationEstimate est = dominant_oscillation(corr, f0);
  CHECK(est.bin_width > 0.0);
  CHECK(std::abs(est.frequency - f0) <= est.bin_width);

  // degenerate inputs are declined rather than guessed at
  CorrelationResult tiny;
  tiny.tau = {0.0, 0.1};
  tiny.phi = {C(1.0), C(0.5)};
  CHECK(dominant_oscillation(tiny, f0).frequency == 0.0);
  CHECK(dominant_oscillation(corr, 0.0).frequency == 0.0);
}

TEST_CASE("drive sweep rows are per-point totals plus the validity tag") {
  SystemParams p;
  auto grid = default_omega_grid(128, 16.0);
  std::vector<double> drives = {0.0, 1.2};
  auto rows = drive_sweep_rates(p, drives, grid, 33, 2);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].omega_d == 0.0);
  CHECK(rows[0].occupancy == 0.0);
  CHECK(rows[0].rydberg_valid);
  for (size_t i = 0; i < rows.size(); ++i) {
    SystemParams q = p;
    q.omega_d = C(drives[i], 0.0);
    RateBreakdown rb = total_rates(spectral_rates(q, grid, 33, 2));
    CHECK(testutil::rel_err(rows[i].rs_f, rb.rs_f) < 1e-12);
    CHECK(testutil::rel_err(rows[i].ras_f, rb.ras_f) < 1e-12);
    CHECK(testutil::rel_err(rows[i].rs_d, rb.rs_d) < 1e-12);
    CHECK(testutil::rel_err(rows[i].ras_d, rb.ras_d) < 1e-12);
  }
  CHECK(rows[1].occupancy > 0.0);
}
