#pragma once
#include <array>
#include <vector>

#include <Eigen/Dense>

#include "sfwm/bloch.hpp"
#include "sfwm/params.hpp"

namespace sfwm {

using Mat6 = Eigen::Matrix<C, 6, 6>;
using Vec6 = Eigen::Matrix<C, 6, 1>;

// noise channel order used everywhere: sigma_{21,31,24,34,25,35}
inline constexpr std::array<std::pair<int, int>, 6> kAlpha = {
    {{2, 1}, {3, 1}, {2, 4}, {3, 4}, {2, 5}, {3, 5}}};

struct DetuningAggregates {
  C g1, g2, g3, g4, g5, g6;
};

struct ResponseSet {
  C gamma_as;  // anti-Stokes self coefficient
  C g_raman;   // Stokes (Raman gain) self coefficient
  C kappa_s;   // Stokes <- anti-Stokes coupling
  C kappa_as;  // anti-Stokes <- Stokes coupling
  std::array<C, 6> xi_s{};   // noise couplings into the Stokes channel
  std::array<C, 6> xi_as{};  // noise couplings into the anti-Stokes channel
  double omega = 0.0;
};

DetuningAggregates detuning_aggregates(const SystemParams& p, double omega);

// The compact denominator expression in the weak-pump closed forms,
// kept verbatim for auditing:
//   Omega = g_23 |Oc Od|^2 - 2 |Oc|^4 |Od|^2 + g_25 |Oc|^4 + g_2356 |Oc|^2
C denominator(const DetuningAggregates& agg, C omega_c, C omega_d);

// First-order coherence system M x = b in the channel order above.
Mat6 first_order_matrix(const SystemParams& p, double omega);

// Source vectors for unit Stokes / anti-Stokes drives.
Vec6 stokes_source(const Mat5& rho0);
Vec6 antistokes_source(const Mat5& rho0);

// Exact closed-form coefficients (CSE'd determinant + cofactors of M).
// Throws DenominatorVanishes if |det M| <= 1e-12.
ResponseSet propagation_coefficients(const SystemParams& p, const Mat5& rho0,
                                     double omega);

// Independent check: dense LU solve of the same 6x6 system.
// Throws SingularFirstOrderSystem on rank deficiency.
ResponseSet first_order_oracle(const SystemParams& p, const Mat5& rho0,
                               double omega);

std::vector<ResponseSet> coefficient_scan_omega(
    const SystemParams& p, const std::vector<double>& omega_grid,
    int threads = 0);
// Per-point steady state is recomputed because Omega_d changes it.
std::vector<ResponseSet> coefficient_scan_drive(
    const SystemParams& p, const std::vector<double>& omega_d_grid,
    double omega = 0.0, int threads = 0);

}  // namespace sfwm
