#include "sfwm/response.hpp"

#include <cmath>

#include "sfwm/parallel.hpp"

namespace sfwm {

DetuningAggregates detuning_aggregates(const SystemParams& p, double omega) {
  const C I(0.0, 1.0);
  DetuningAggregates g;
  g.g1 = p.dephasing(2, 1) + I * omega;
  g.g2 = p.dephasing(2, 4) + I * (omega + p.delta_p);
  g.g3 = p.dephasing(2, 5) + I * (omega + p.delta_15);
  g.g4 = p.dephasing(3, 1) + I * (omega - p.delta_c);
  g.g5 = p.dephasing(3, 4) + I * (omega + p.delta_p - p.delta_c);
  g.g6 = p.dephasing(3, 5) + I * (omega + p.delta_15 - p.delta_c);
  return g;
}

C denominator(const DetuningAggregates& g, C omega_c, C omega_d) {
  double c2 = std::norm(omega_c);
  double d2 = std::norm(omega_d);
  return g.g2 * g.g3 * (c2 * d2) - 2.0 * (c2 * c2) * d2 +
         g.g2 * g.g5 * (c2 * c2) + g.g2 * g.g3 * g.g5 * g.g6 * c2;
}

Mat6 first_order_matrix(const SystemParams& p, double omega) {
  DetuningAggregates g = detuning_aggregates(p, omega);
  const C I(0.0, 1.0);
  C wc = p.omega_c, wd = p.omega_d, wp = p.omega_p;
  Mat6 M = Mat6::Zero();
  // channel order: s21 s31 s24 s34 s25 s35
  M(0, 0) = g.g1;
  M(0, 1) = I * wc;
  M(0, 2) = -I * std::conj(wp);
  M(1, 0) = I * std::conj(wc);
  M(1, 1) = g.g4;
  M(1, 3) = -I * std::conj(wp);
  M(2, 0) = -I * wp;
  M(2, 2) = g.g2;
  M(2, 3) = I * wc;
  M(2, 4) = -I * std::conj(wd);
  M(3, 1) = -I * wp;
  M(3, 2) = I * std::conj(wc);
  M(3, 3) = g.g5;
  M(3, 5) = -I * std::conj(wd);
  M(4, 2) = -I * wd;
  M(4, 4) = g.g3;
  M(4, 5) = I * wc;
  M(5, 3) = -I * wd;
  M(5, 4) = I * std::conj(wc);
  M(5, 5) = g.g6;
  return M;
}

Vec6 stokes_source(const Mat5& rho0) {
  const C I(0.0, 1.0);
  auto s = [&](int m, int n) { return rho0(m - 1, n - 1); };
  Vec6 b;
  b << -I * s(4, 1), 0.0, -I * (s(4, 4) - s(2, 2)), I * s(3, 2), -I * s(4, 5),
      0.0;
  return b;
}

Vec6 antistokes_source(const Mat5& rho0) {
  const C I(0.0, 1.0);
  auto s = [&](int m, int n) { return rho0(m - 1, n - 1); };
  Vec6 b;
  b << I * s(2, 3), -I * (s(1, 1) - s(3, 3)), 0.0, -I * s(1, 4), 0.0,
      -I * s(1, 5);
  return b;
}

namespace {

struct ClosedFormRows {
  C det;
  std::array<C, 6> ks;  // adjugate row of the s24 channel
  std::array<C, 6> ka;  // adjugate row of the s31 channel
};

// Machine-generated (CSE'd) determinant and the two adjugate rows of the
// 6x6 first-order matrix; verified against the LU oracle in the tests.
ClosedFormRows closed_form_rows(const DetuningAggregates& g, C wp, C wc,
                                C wd) {
  const C J(0.0, 1.0);
  const C g1 = g.g1, g2 = g.g2, g3 = g.g3, g4 = g.g4, g5 = g.g5, g6 = g.g6;
  const C wpc = std::conj(wp), wcc = std::conj(wc), wdc = std::conj(wd);

  const C x0 = g1 * g2;
  const C x1 = g5 * g6;
  const C x2 = g3 * x1;
  const C x3 = g4 * x2;
  const C x4 = wd * wdc;
  const C x5 = g3 * x4;
  const C x6 = g4 * x5;
  const C x7 = wp * wpc;
  const C x8 = g3 * x7;
  const C x9 = g6 * x8;
  const C x10 = wc * wcc;
  const C x11 = g5 * x10;
  const C x12 = g4 * x11;
  const C x13 = x10 * x7;
  const C x14 = g1 * g6;
  const C x15 = g3 * x14;
  const C x16 = g4 * x15;
  const C x17 = g5 * x14;
  const C x18 = g4 * x17;
  const C x19 = x14 * x7;
  const C x20 = g2 * x2;
  const C x21 = g2 * x5;
  const C x22 = x10 * x4;
  const C x23 = g1 * x10;
  const C x24 = g4 * x23;
  const C x25 = 2.0 * x4;
  const C x26 = g3 * x10;
  const C x27 = g6 * x26;
  const C x28 = wc * wc * wcc * wcc;
  const C x29 = g1 * g4;
  const C x30 = wd * wd * wdc * wdc;
  const C x31 = g5 * x28;
  const C x32 = g3 * g6;
  const C x33 = wp * wp * wpc * wpc;
  const C x34 = 2.0 * x28;
  const C x35 = x13 + x22 - x28;
  const C x36 = -x27 + x35 + x9;
  const C x37 = g1 * x4;
  const C x38 = x11 + x15 + x2 + x23 - x37 + x5;
  const C x39 = -g3 * g6 * wp * wpc - wc * wcc * wp * wpc + x27 + x28;
  const C x40 = J * wdc;
  const C x41 = wcc * wpc;
  const C x42 = g3 * x0;

  ClosedFormRows out;
  out.det = g2 * x31 + wc * wc * wc * wcc * wcc * wcc + x0 * x12 + x0 * x13 +
            x0 * x3 + x0 * x6 + x0 * x9 + x1 * x22 + x10 * x16 + x10 * x20 +
            x10 * x21 + x10 * x30 + x10 * x33 + x12 * x7 + x18 * x4 +
            x19 * x4 + 2.0 * x22 * x7 - x24 * x25 - 2.0 * x27 * x7 +
            x28 * x29 + x28 * x32 + x29 * x30 + x3 * x7 + x32 * x33 -
            x34 * x4 - x34 * x7 + x6 * x7;
  out.ks[0] = J * wp * (x12 + x3 + x36 + x6);
  out.ks[1] = wc * wp * x38;
  out.ks[2] = g5 * x16 + g5 * x24 + x10 * x2 + x10 * x5 + x15 * x7 +
              x23 * x7 + x29 * x5 + x31;
  out.ks[3] = J * wc *
              (g1 * g4 * wd * wdc + wc * wcc * wd * wdc - x16 - x24 - x39);
  out.ks[4] = x40 * (g4 * x37 + x1 * x10 + x18 + x19 - x24 + x35);
  out.ks[5] = wc * wdc * (g1 * x7 + g3 * x29 + g5 * x29 + x11 + x26 - x8);
  out.ka[0] = J * wcc *
              (-g2 * x11 + 2.0 * wc * wcc * wd * wdc - x1 * x4 - x20 - x21 -
               x30 - x39 - x4 * x7);
  out.ka[1] = g1 * x28 + g1 * x30 + x0 * x11 + x0 * x2 + x0 * x5 + x10 * x15 +
              x11 * x7 + x17 * x4 + x2 * x7 - x23 * x25 + x5 * x7;
  out.ka[2] = x38 * x41;
  out.ka[3] = J * wpc * (g6 * x42 + x0 * x10 + x14 * x4 + x36);
  out.ka[4] = x40 * x41 * (x0 + x1 - x10 + x14 + x4 + x7);
  out.ka[5] = wdc * wpc *
              (g1 * wc * wcc + g3 * wc * wcc + g5 * wc * wcc - x37 - x42 - x8);
  return out;
}

ResponseSet assemble(const SystemParams& p, const Mat5& rho0, double omega,
                     const std::array<C, 6>& row_s24,
                     const std::array<C, 6>& row_s31) {
  const C I(0.0, 1.0);
  double ns = p.density * p.cross_section * p.gamma31;
  C pref = -I * ns;
  C npref = 2.0 * I * std::sqrt(ns);
  Vec6 bs = stokes_source(rho0);
  Vec6 bas = antistokes_source(rho0);
  ResponseSet r;
  r.omega = omega;
  C xs24 = 0, xs31 = 0, xas24 = 0, xas31 = 0;
  for (int a = 0; a < 6; ++a) {
    xs24 += row_s24[a] * bs(a);
    xas24 += row_s24[a] * bas(a);
    xs31 += row_s31[a] * bs(a);
    xas31 += row_s31[a] * bas(a);
    r.xi_s[a] = npref * row_s24[a];
    r.xi_as[a] = npref * row_s31[a];
  }
  r.g_raman = pref * xs24;
  r.kappa_s = pref * xas24;
  r.kappa_as = pref * xs31;
  r.gamma_as = pref * xas31;
  return r;
}

}  // namespace

ResponseSet propagation_coefficients(const SystemParams& p, const Mat5& rho0,
                                     double omega) {
  DetuningAggregates g = detuning_aggregates(p, omega);
  ClosedFormRows cf = closed_form_rows(g, p.omega_p, p.omega_c, p.omega_d);
  if (std::abs(cf.det) <= 1e-12)
    throw SimError(ErrKind::DenominatorVanishes,
                   "first-order determinant vanishes at omega=" +
                       std::to_string(omega));
  std::array<C, 6> row24, row31;
  for (int a = 0; a < 6; ++a) {
    row24[a] = cf.ks[a] / cf.det;
    row31[a] = cf.ka[a] / cf.det;
  }
  return assemble(p, rho0, omega, row24, row31);
}

ResponseSet first_order_oracle(const SystemParams& p, const Mat5& rho0,
                               double omega) {
  Mat6 M = first_order_matrix(p, omega);
  Eigen::FullPivLU<Mat6> lu(M);
  if (!lu.isInvertible())
    throw SimError(ErrKind::SingularFirstOrderSystem,
                   "first-order system is rank-deficient at omega=" +
                       std::to_string(omega));
  Mat6 Minv = lu.inverse();
  std::array<C, 6> row24, row31;
  for (int a = 0; a < 6; ++a) {
    row24[a] = Minv(2, a);
    row31[a] = Minv(1, a);
  }
  return assemble(p, rho0, omega, row24, row31);
}

std::vector<ResponseSet> coefficient_scan_omega(
    const SystemParams& p, const std::vector<double>& omega_grid,
    int threads) {
  Mat5 rho0 = solve_steady_state(p);
  std::vector<ResponseSet> out(omega_grid.size());
  parallel_for(
      omega_grid.size(),
      [&](size_t i) {
        out[i] = propagation_coefficients(p, rho0, omega_grid[i]);
      },
      threads);
  return out;
}

std::vector<ResponseSet> coefficient_scan_drive(
    const SystemParams& p, const std::vector<double>& omega_d_grid,
    double omega, int threads) {
  std::vector<ResponseSet> out(omega_d_grid.size());
  parallel_for(
      omega_d_grid.size(),
      [&](size_t i) {
        SystemParams q = p;
        q.omega_d = C(omega_d_grid[i], 0.0);
        Mat5 rho0 = solve_steady_state(q);
        out[i] = propagation_coefficients(q, rho0, omega);
      },
      threads);
  return out;
}

}  // namespace sfwm
