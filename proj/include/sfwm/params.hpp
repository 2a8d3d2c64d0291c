#pragma once
#include <complex>

#include "sfwm/errors.hpp"

namespace sfwm {

using C = std::complex<double>;

// Five-level system: |1>,|2> ground, |3>,|4> excited, |5> Rydberg.
// Pump drives 1<->4, coupling 2<->3, drive 4<->5; Stokes is generated on
// 2<->4, anti-Stokes on 1<->3.
//
// Internal unit system: gamma31 = 1 (all rates/frequencies are multiples of
// it), lengths in cm, densities in cm^-3. Absolute (s^-1) rates only make
// sense when gamma31_hz is supplied; light speed inside the solver is
// light_speed_cm_s / gamma31_hz, i.e. cm per unit of 1/gamma31.
struct SystemParams {
  double gamma31 = 1.0;  // the rate unit itself; kept explicit for clarity

  // population decay rates Gamma_{mn}
  double Gamma41 = 1.0, Gamma42 = 1.0;
  double Gamma31 = 1.0, Gamma32 = 1.0;
  double Gamma53 = 1e-3, Gamma54 = 1e-3;

  double gamma21 = 1e-3;  // ground-coherence dephasing

  C omega_p{1.2, 0.0};  // pump
  C omega_c{3.0, 0.0};  // coupling
  C omega_d{1.2, 0.0};  // drive

  double delta_p = 24.0, delta_c = 0.0, delta_d = 0.0, delta_15 = 24.0;

  double density = 1e12;        // cm^-3
  double cross_section = 1e-9;  // cm^2
  double length = 0.01;         // cm

  // van der Waals coefficient, units gamma31 * cm^6. The default is
  // calibrated so that the blockade-sphere occupancy equals 1 at
  // Omega_d = 17 gamma31 and density 1e12 cm^-3.
  double c6 = 4.08765465018142e-23;

  double light_speed_cm_s = 2.998e10;
  double gamma31_hz = 3.6109e7;  // 0 disables absolute-rate reporting

  // optional dephasing overrides for the pairs the relaxation list leaves
  // open; negative means "use the derived convention"
  double gamma24_override = -1.0;
  double gamma25_override = -1.0;
  double gamma35_override = -1.0;
  double gamma51_override = -1.0;

  double Gamma3() const { return Gamma31 + Gamma32; }
  double Gamma4() const { return Gamma41 + Gamma42; }
  double Gamma5() const { return Gamma53 + Gamma54; }

  // coherence decay rate gamma_{mn}, 1-based levels, symmetric in (m,n)
  double dephasing(int m, int n) const;

  // speed of light in internal units (cm per 1/gamma31); 0 if unknown
  double c_internal() const {
    return gamma31_hz > 0.0 ? light_speed_cm_s / gamma31_hz : 0.0;
  }

  void validate() const;  // throws SimError(ValidationError)
};

}  // namespace sfwm
