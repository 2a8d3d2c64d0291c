#include "sfwm/propagation.hpp"

#include <cmath>

namespace sfwm {

Eigen::Matrix2cd expm2(const Eigen::Matrix2cd& M) {
  // exp(M) = e^mu (cosh(D) I + sinhc(D) (M - mu I)),
  // mu = tr/2, D^2 = mu^2 - det
  C mu = 0.5 * (M(0, 0) + M(1, 1));
  C det = M(0, 0) * M(1, 1) - M(0, 1) * M(1, 0);
  C D2 = mu * mu - det;
  C D = std::sqrt(D2);
  C ch, shc;
  if (std::abs(D) < 1e-4) {
    // series in D^2 avoids cancellation at near-degenerate eigenvalues
    ch = 1.0 + D2 / 2.0 + D2 * D2 / 24.0 + D2 * D2 * D2 / 720.0;
    shc = 1.0 + D2 / 6.0 + D2 * D2 / 120.0 + D2 * D2 * D2 / 5040.0;
  } else {
    ch = std::cosh(D);
    shc = std::sinh(D) / D;
  }
  Eigen::Matrix2cd R = Eigen::Matrix2cd::Identity() * ch;
  R += shc * (M - mu * Eigen::Matrix2cd::Identity());
  return std::exp(mu) * R;
}

namespace {
Eigen::Matrix2cd coeff_matrix(const ResponseSet& r) {
  Eigen::Matrix2cd K;
  K << r.g_raman, r.kappa_s, r.kappa_as, r.gamma_as;
  return K;
}
}  // namespace

Transfer2 transfer_matrix(const ResponseSet& resp, double L) {
  Eigen::Matrix2cd m = expm2(-L * coeff_matrix(resp));
  return Transfer2{m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

BoundaryMatrix boundary_matrix(const Transfer2& m) {
  if (std::abs(m.d) <= 1e-14)
    throw SimError(ErrKind::SingularBoundary,
                   "transfer matrix d-entry vanishes");
  BoundaryMatrix b;
  b.A = m.a - m.b * m.c / m.d;
  b.B = m.b / m.d;
  b.Cc = -m.c / m.d;
  b.D = 1.0 / m.d;
  return b;
}

TransferSolution noise_kernels(const ResponseSet& resp, double L, int nz) {
  TransferSolution sol;
  sol.omega = resp.omega;
  sol.m = transfer_matrix(resp, L);
  sol.bc = boundary_matrix(sol.m);
  Eigen::Matrix2cd K = coeff_matrix(resp);
  sol.zgrid.resize(nz);
  sol.P.resize(nz);
  sol.Q.resize(nz);
  double dz = nz > 1 ? L / (nz - 1) : 0.0;
  C bd = sol.bc.B;       // b/d
  C invd = 1.0 / sol.m.d;
  for (int k = 0; k < nz; ++k) {
    double z = k * dz;
    sol.zgrid[k] = z;
    Eigen::Matrix2cd E = expm2((z - L) * K);
    for (int a = 0; a < 6; ++a) {
      C w0 = E(0, 0) * resp.xi_s[a] + E(0, 1) * resp.xi_as[a];
      C w1 = E(1, 0) * resp.xi_s[a] + E(1, 1) * resp.xi_as[a];
      sol.P[k][a] = w0 - bd * w1;
      sol.Q[k][a] = -invd * w1;
    }
  }
  return sol;
}

double commutator_diagnostic(const TransferSolution& sol,
                             const Mat6& stokes_q, const Mat6& antistokes_q) {
  // informational: residual of the output Stokes commutator
  double quad = 0.0;
  size_t nz = sol.zgrid.size();
  std::vector<double> integrand(nz, 0.0);
  for (size_t k = 0; k < nz; ++k) {
    C acc = 0.0;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        acc += sol.P[k][i] * antistokes_q(i, j) * std::conj(sol.P[k][j]);
        acc -= std::conj(sol.P[k][i]) * stokes_q(i, j) * sol.P[k][j];
      }
    integrand[k] = acc.real();
  }
  if (nz > 1) {
    double dz = sol.zgrid[1] - sol.zgrid[0];
    for (size_t k = 0; k < nz; ++k) {
      double w = (k == 0 || k == nz - 1) ? 0.5 : 1.0;
      quad += w * dz * integrand[k];
    }
  }
  return std::norm(sol.bc.A) - std::norm(sol.bc.B) + quad - 1.0;
}

}  // namespace sfwm
