#include "sfwm/bloch.hpp"

#include <cmath>

namespace sfwm {

Mat25 build_drift_matrix(const SystemParams& p, double omega) {
  Mat25 L = Mat25::Zero();
  const C I(0.0, 1.0);

  // effective single-atom Hamiltonian in the rotating frame; E2/E3 carry
  // the Fourier offset of the generated-field coherence block
  double E[6] = {0.0, 0.0, -omega, p.delta_c - omega, p.delta_p, p.delta_15};
  Mat5 h = Mat5::Zero();
  for (int m = 1; m <= 5; ++m) h(m - 1, m - 1) = E[m];
  h(3, 0) = -p.omega_p;
  h(0, 3) = -std::conj(p.omega_p);
  h(2, 1) = -p.omega_c;
  h(1, 2) = -std::conj(p.omega_c);
  h(4, 3) = -p.omega_d;
  h(3, 4) = -std::conj(p.omega_d);

  // coherent part: d<s_mn>/dt = i sum_q h[q,m] s_qn - i sum_q h[n,q] s_mq
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n)
      for (int q = 1; q <= 5; ++q) {
        L(vec_index(m, n), vec_index(q, n)) += I * h(q - 1, m - 1);
        L(vec_index(m, n), vec_index(m, q)) -= I * h(n - 1, q - 1);
      }

  // The 5<->4 coherence rotates at the drive detuning, not at the frame
  // difference E5 - E4; shift its diagonal accordingly.
  C corr = I * (p.delta_d - (p.delta_15 - p.delta_p));
  L(vec_index(5, 4), vec_index(5, 4)) += corr;
  L(vec_index(4, 5), vec_index(4, 5)) -= corr;

  // relaxation: coherence dephasing + population transfer
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n)
      if (m != n) L(vec_index(m, n), vec_index(m, n)) -= p.dephasing(m, n);
  L(vec_index(1, 1), vec_index(4, 4)) += p.Gamma41;
  L(vec_index(1, 1), vec_index(3, 3)) += p.Gamma31;
  L(vec_index(2, 2), vec_index(4, 4)) += p.Gamma42;
  L(vec_index(2, 2), vec_index(3, 3)) += p.Gamma32;
  L(vec_index(3, 3), vec_index(3, 3)) -= p.Gamma3();
  L(vec_index(3, 3), vec_index(5, 5)) += p.Gamma53;
  L(vec_index(4, 4), vec_index(4, 4)) -= p.Gamma4();
  L(vec_index(4, 4), vec_index(5, 5)) += p.Gamma54;
  L(vec_index(5, 5), vec_index(5, 5)) -= p.Gamma5();
  return L;
}

Mat5 solve_steady_state(const SystemParams& p) {
  Mat25 A = build_drift_matrix(p, 0.0);
  Vec25 b = Vec25::Zero();
  int r = vec_index(1, 1);
  A.row(r).setZero();
  for (int m = 1; m <= 5; ++m) A(r, vec_index(m, m)) = 1.0;
  b(r) = 1.0;

  Eigen::JacobiSVD<Mat25> svd(A, Eigen::ComputeFullU | Eigen::ComputeFullV);
  double smax = svd.singularValues()(0);
  double smin = svd.singularValues()(24);
  if (!(smax > 0.0) || smin / smax < 1e-12)
    throw SimError(ErrKind::DegenerateSteadyState,
                   "constrained steady-state system is rank-deficient");

  Vec25 x = A.partialPivLu().solve(b);
  Mat5 rho;
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n) rho(m - 1, n - 1) = x(vec_index(m, n));
  return rho;
}

Mat5 integrate_bloch(const SystemParams& p, const Mat5& rho_init,
                     double t_end, double dt) {
  Mat25 L = build_drift_matrix(p, 0.0);
  Vec25 x;
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n) x(vec_index(m, n)) = rho_init(m - 1, n - 1);

  auto trace = [](const Vec25& v) {
    C t = 0;
    for (int m = 1; m <= 5; ++m) t += v(vec_index(m, m));
    return t;
  };
  const double tr0 = trace(x).real();

  double t = 0.0;
  long check_every = 64, step = 0;
  while (t < t_end) {
    double h = std::min(dt, t_end - t);
    Vec25 k1 = L * x;
    Vec25 k2 = L * (x + 0.5 * h * k1);
    Vec25 k3 = L * (x + 0.5 * h * k2);
    Vec25 k4 = L * (x + h * k3);
    x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t += h;
    if (++step % check_every == 0 || t >= t_end) {
      if (!(std::abs(trace(x) - tr0) <= 1e-6))  // NaN-safe
        throw SimError(ErrKind::StepSizeTooLarge,
                       "trace drift exceeds 1e-6 during integration");
    }
  }
  Mat5 rho;
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n) rho(m - 1, n - 1) = x(vec_index(m, n));
  return rho;
}

}  // namespace sfwm
