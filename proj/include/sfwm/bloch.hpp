#pragma once
#include <Eigen/Dense>

#include "sfwm/params.hpp"

namespace sfwm {

using Mat25 = Eigen::Matrix<C, 25, 25>;
using Vec25 = Eigen::Matrix<C, 25, 1>;
using Mat5 = Eigen::Matrix<C, 5, 5>;  // rho(m-1,n-1) = <sigma_mn>

// vectorization of sigma_mn, 1-based levels
inline int vec_index(int m, int n) { return 5 * (m - 1) + (n - 1); }

// Linear drift L with d<sigma>/dt = L <sigma> for the closed system
// (generated fields off, noise dropped). omega is the Fourier offset of the
// {21,31,24,34,25,35} coherence block; the zeroth-order problem uses 0.
Mat25 build_drift_matrix(const SystemParams& p, double omega = 0.0);

// Steady state: drift with the sigma_11 row replaced by the trace
// constraint, dense LU. Throws DegenerateSteadyState when the constrained
// system is effectively rank-deficient.
Mat5 solve_steady_state(const SystemParams& p);

// Fixed-step RK4 on d rho/dt = L rho; independent check on the linear solve.
// Throws StepSizeTooLarge if the trace drifts by more than 1e-6.
Mat5 integrate_bloch(const SystemParams& p, const Mat5& rho_init,
                     double t_end, double dt);

}  // namespace sfwm
