#pragma once
#include <string>

#include "sfwm/params.hpp"

namespace sfwm {

enum class Mode {
  SteadyState,
  ValidityCurve,
  CoefficientScan,
  DriveSweep,
  G2,
  FullReport,
};

const char* mode_name(Mode m);
Mode parse_mode(const std::string& s);  // throws ValidationError

struct GridSpec {
  double min = 0, max = 0;
  int count = 2;
};

enum class ScanVariable { Omega, OmegaD };

struct RunConfig {
  Mode mode = Mode::SteadyState;
  SystemParams params;
  GridSpec omega{-16.0, 16.0, 4096};  // endpoint-excluded observables grid
  GridSpec omega_d{0.0, 17.0, 35};
  GridSpec tau{0.0, 25.0, 512};  // advisory; g2 tau comes from FFT conjugacy
  ScanVariable scan = ScanVariable::Omega;
  double scan_omega_at = 0.0;  // omega used for drive scans
  std::string output_dir = "out";
  bool emit_csv = true;
  bool emit_json = true;
  bool emit_gnuplot = false;
  int threads = 0;
  int nz = 256;
  std::string preset_name;  // empty if none

  void validate() const;  // throws ValidationError
};

// JSON (.json) or a TOML subset (.toml) decided by extension. Unknown keys
// are rejected with their path; all physical fields are range-checked.
RunConfig load_config(const std::string& path);
RunConfig config_from_json_text(const std::string& text,
                                const std::string& source_name);

// Canonical serialization (stable key order, 17-significant-digit floats);
// reloading it reproduces the config exactly.
std::string canonical_config_json(const RunConfig& cfg);

// Figure-recipe presets: figA, figB, figC, figD, figF_a, figF_b.
// Throws UnknownPreset.
RunConfig preset(const std::string& name);

}  // namespace sfwm
