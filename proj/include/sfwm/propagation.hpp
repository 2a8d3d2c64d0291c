#pragma once
#include <vector>

#include <Eigen/Dense>

#include "sfwm/diffusion.hpp"
#include "sfwm/response.hpp"

namespace sfwm {

struct Transfer2 {
  C a, b, c, d;
};

struct BoundaryMatrix {
  C A, B, Cc, D;  // Cc to avoid clashing with the complex alias
};

struct TransferSolution {
  Transfer2 m;
  BoundaryMatrix bc;
  double omega = 0.0;
  std::vector<double> zgrid;
  // kernels per z point, channel order kAlpha
  std::vector<std::array<C, 6>> P, Q;
};

// Closed-form 2x2 matrix exponential exp(M), stable near degenerate
// eigenvalues (sinhc series branch).
Eigen::Matrix2cd expm2(const Eigen::Matrix2cd& M);

// Propagator of the homogeneous coupled Stokes / anti-Stokes ODEs over a
// cell of length L: exp(-K L) with K = [[g_raman, kappa_s],[kappa_as,
// gamma_as]].
Transfer2 transfer_matrix(const ResponseSet& resp, double L);

// Boundary rearrangement {A,B;C,D} = {a - b c / d, b/d; -c/d, 1/d} mapping
// (a_s(0), a_as^dag(L)) -> (a_s(L), a_as^dag(0)).
// Throws SingularBoundary if |d| <= 1e-14.
BoundaryMatrix boundary_matrix(const Transfer2& m);

// Noise kernels [P;Q](z) = [[1, -b/d],[0, -1/d]] exp(K (z - L)) [xi_s;
// xi_as] on a uniform nz-point z-grid over [0, L].
TransferSolution noise_kernels(const ResponseSet& resp, double L, int nz);

// Informational consistency check of the output Stokes commutator:
//   |A|^2 - |B|^2 + int_z sum_{aa'} (P_a A_{aa'} P*_a' - P*_a S_{aa'} P_a')
//   - 1
// where S, A are the two quadrature contraction matrices. Reported, never
// asserted beyond trivial limits.
double commutator_diagnostic(const TransferSolution& sol, const Mat6& stokes_q,
                             const Mat6& antistokes_q);

}  // namespace sfwm
