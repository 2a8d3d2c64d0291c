#include "sfwm/params.hpp"

#include <cmath>
#include <string>

namespace sfwm {

double SystemParams::dephasing(int m, int n) const {
  if (m > n) std::swap(m, n);  // symmetric
  if (m == 1 && n == 2) return gamma21;
  if (m == 1 && n == 3) return Gamma3() / 2.0;
  if (m == 2 && n == 3) return Gamma3() / 2.0;
  if (m == 1 && n == 4)
    return gamma24_override >= 0 ? gamma24_override : Gamma4() / 2.0;
  if (m == 2 && n == 4)
    return gamma24_override >= 0 ? gamma24_override : Gamma4() / 2.0;
  if (m == 1 && n == 5)
    return gamma51_override >= 0 ? gamma51_override : Gamma5() / 2.0;
  if (m == 2 && n == 5)
    return gamma25_override >= 0 ? gamma25_override : Gamma5() / 2.0;
  if (m == 3 && n == 4) return (Gamma3() + Gamma4()) / 2.0;
  if (m == 3 && n == 5)
    return gamma35_override >= 0 ? gamma35_override
                                 : (Gamma3() + Gamma5()) / 2.0;
  if (m == 4 && n == 5) return (Gamma4() + Gamma5()) / 2.0;
  return 0.0;  // m == n
}

void SystemParams::validate() const {
  auto fail = [](const std::string& field, const std::string& why) {
    throw SimError(ErrKind::ValidationError, "params." + field + ": " + why);
  };
  auto pos = [&](double v, const char* field) {
    if (!(v > 0.0) || !std::isfinite(v)) fail(field, "must be positive");
  };
  pos(gamma31, "gamma31");
  pos(Gamma41, "Gamma41");
  pos(Gamma42, "Gamma42");
  pos(Gamma31, "Gamma31");
  pos(Gamma32, "Gamma32");
  pos(Gamma53, "Gamma53");
  pos(Gamma54, "Gamma54");
  pos(gamma21, "gamma21");
  pos(density, "density");
  pos(cross_section, "cross_section");
  pos(length, "length");
  if (c6 < 0.0 || !std::isfinite(c6)) fail("c6", "must be non-negative");
  if (gamma31_hz < 0.0 || !std::isfinite(gamma31_hz))
    fail("gamma31_hz", "must be non-negative");
  pos(light_speed_cm_s, "light_speed_cm_s");
  for (double d : {delta_p, delta_c, delta_d, delta_15})
    if (!std::isfinite(d)) fail("detunings", "must be finite");
  for (C w : {omega_p, omega_c, omega_d})
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
      fail("rabi", "must be finite");
}

}  // namespace sfwm
