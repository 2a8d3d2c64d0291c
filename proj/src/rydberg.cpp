#include "sfwm/rydberg.hpp"

#include <cmath>

#include "sfwm/bloch.hpp"

namespace sfwm {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double blockade_radius(const SystemParams& p) {
  double od2 = std::norm(p.omega_d);
  if (od2 == 0.0)
    throw SimError(ErrKind::ZeroDrive,
                   "blockade radius diverges at zero drive");
  if (!(p.delta_p > 0.0))
    throw SimError(ErrKind::ValidationError,
                   "blockade radius needs delta_p > 0");
  return std::pow(p.c6 * p.delta_p / od2, 1.0 / 6.0);
}

double meanfield_shift(const SystemParams& p, double sigma55, double r_b) {
  if (p.c6 == 0.0) return 0.0;
  // closed form of the radial tail integral: int_{Rb}^inf C6/r^6 4 pi r^2 dr
  // = 4 pi C6 / (3 Rb^3), weighted by the Rydberg density
  return (4.0 * kPi / 3.0) * p.density * p.c6 * sigma55 / (r_b * r_b * r_b);
}

double occupancy(const SystemParams& p, double sigma55, double r_b) {
  double r3 = 3.0 * r_b;
  return (4.0 * kPi / 3.0) * r3 * r3 * r3 * p.density * sigma55;
}

RydbergAssessment assess_rydberg(const SystemParams& p) {
  RydbergAssessment out{};
  double rb = blockade_radius(p);
  double s55 = solve_steady_state(p)(4, 4).real();
  out.delta_eit = std::norm(p.omega_d) / p.delta_p;
  out.r_blockade = rb;
  out.shift_s = meanfield_shift(p, s55, rb);
  out.occupancy = occupancy(p, s55, rb);
  out.valid = out.occupancy <= 1.0;
  return out;
}

std::vector<std::pair<double, double>> boundary_density_curve(
    const SystemParams& p, const std::vector<double>& omega_d_grid,
    double ceiling) {
  std::vector<std::pair<double, double>> out;
  out.reserve(omega_d_grid.size());
  for (double od : omega_d_grid) {
    SystemParams q = p;
    q.omega_d = C(od, 0.0);
    double rb = blockade_radius(q);
    double s55 = solve_steady_state(q)(4, 4).real();
    double vol = 36.0 * kPi * rb * rb * rb;  // (4pi/3)(3Rb)^3
    double nmax = s55 > 0.0 ? 1.0 / (vol * s55) : ceiling;
    out.emplace_back(od, std::min(nmax, ceiling));
  }
  return out;
}

double self_consistent_delta15(const SystemParams& p) {
  double d15 = p.delta_p + p.delta_d;
  for (int it = 0; it < 500; ++it) {
    SystemParams q = p;
    q.delta_15 = d15;
    double rb = blockade_radius(q);
    double s55 = solve_steady_state(q)(4, 4).real();
    double target = p.delta_p + p.delta_d + meanfield_shift(q, s55, rb);
    double next = d15 + 0.5 * (target - d15);
    if (std::abs(next - d15) < 1e-8) return next;
    d15 = next;
  }
  throw SimError(ErrKind::NoConvergence,
                 "delta_15 fixed point did not converge in 500 iterations");
}

}  // namespace sfwm
