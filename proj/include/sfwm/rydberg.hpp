#pragma once
#include <utility>
#include <vector>

#include "sfwm/params.hpp"

namespace sfwm {

struct RydbergAssessment {
  double delta_eit;    // |Omega_d|^2 / Delta_p
  double r_blockade;   // cm
  double shift_s;      // mean-field level shift, gamma31 units
  double occupancy;    // expected Rydberg atoms in the 3*R_b sphere
  bool valid;          // occupancy <= 1
};

// R_b = (C6 * Delta_p / |Omega_d|^2)^(1/6). Throws ZeroDrive at Omega_d = 0.
double blockade_radius(const SystemParams& p);

// s = (4pi/3) * density * C6 * sigma55 / R_b^3
double meanfield_shift(const SystemParams& p, double sigma55, double r_b);

// occupancy = (4pi/3) * (3 R_b)^3 * density * sigma55
double occupancy(const SystemParams& p, double sigma55, double r_b);

// Convenience bundle; sigma55 taken from the steady state.
RydbergAssessment assess_rydberg(const SystemParams& p);

// For each Omega_d, the density at which occupancy hits 1 (sigma55 is
// density-independent, so this is closed-form); capped at `ceiling`.
std::vector<std::pair<double, double>> boundary_density_curve(
    const SystemParams& p, const std::vector<double>& omega_d_grid,
    double ceiling = 1e30);

// Damped fixed-point iteration for delta_15 = delta_p + delta_d + s.
// Throws NoConvergence after 500 iterations.
double self_consistent_delta15(const SystemParams& p);

}  // namespace sfwm
