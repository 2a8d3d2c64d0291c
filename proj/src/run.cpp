#include "sfwm/run.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "sfwm/bloch.hpp"
#include "sfwm/io.hpp"
#include "sfwm/observables.hpp"
#include "sfwm/response.hpp"
#include "sfwm/rydberg.hpp"

namespace sfwm {

namespace {

using ojson = nlohmann::ordered_json;
namespace fs = std::filesystem;

std::vector<double> fft_grid(const GridSpec& g) {
  // endpoint-excluded uniform grid (FFT conjugacy)
  std::vector<double> out(g.count);
  double d = (g.max - g.min) / g.count;
  for (int i = 0; i < g.count; ++i) out[i] = g.min + i * d;
  return out;
}

std::string f17(double v) { return format_g17(v); }

void emit_gnuplot_script(const fs::path& dir, const std::string& name,
                         const std::string& csv, int ycol,
                         const std::string& title) {
  std::ofstream f(dir / (name + ".gp"), std::ios::binary);
  f << "set datafile separator ','\n"
    << "set key autotitle columnhead\n"
    << "plot '" << csv << "' using 1:" << ycol << " with lines title '"
    << title << "'\n";
}

struct Emitter {
  const RunConfig& cfg;
  fs::path dir;
  ojson artifacts = ojson::array();

  void csv(const std::string& name, const CsvTable& t) {
    if (!cfg.emit_csv) return;
    write_csv((dir / name).string(), t);
    artifacts.push_back(name);
  }
};

void run_steady_state(const RunConfig& cfg, Emitter& em) {
  Mat5 rho = solve_steady_state(cfg.params);
  CsvTable t;
  t.header = {"m", "n", "re_rho_mn", "im_rho_mn"};
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n)
      t.rows.push_back({std::to_string(m), std::to_string(n),
                        f17(rho(m - 1, n - 1).real()),
                        f17(rho(m - 1, n - 1).imag())});
  em.csv("steady_state.csv", t);
}

void run_validity_curve(const RunConfig& cfg, Emitter& em) {
  auto grid = uniform_grid(cfg.omega_d.min, cfg.omega_d.max, cfg.omega_d.count);
  double ceiling = 1e30;
  auto curve = boundary_density_curve(cfg.params, grid, ceiling);
  CsvTable t;
  t.header = {"omega_d_over_gamma31", "n_max_per_cm3", "n_max_per_um3",
              "valid_ceiling_hit"};
  for (auto& [od, nmax] : curve)
    t.rows.push_back({f17(od), f17(nmax), f17(nmax * 1e-12),
                      nmax >= ceiling ? "1" : "0"});
  em.csv("validity_curve.csv", t);
  if (cfg.emit_gnuplot)
    emit_gnuplot_script(em.dir, "validity_curve", "validity_curve.csv", 3,
                        "boundary density");
}

CsvTable response_table(const std::vector<ResponseSet>& scan,
                        const std::vector<double>& xs,
                        const std::string& xname) {
  CsvTable t;
  t.header = {xname,
              "re_gamma_as_per_cm", "im_gamma_as_per_cm",
              "re_g_raman_per_cm", "im_g_raman_per_cm",
              "re_kappa_s_per_cm", "im_kappa_s_per_cm",
              "re_kappa_as_per_cm", "im_kappa_as_per_cm"};
  const char* chan[6] = {"21", "31", "24", "34", "25", "35"};
  for (const char* c : chan)
    t.header.push_back(std::string("abs_xi_s_") + c);
  for (const char* c : chan)
    t.header.push_back(std::string("abs_xi_as_") + c);
  for (size_t i = 0; i < scan.size(); ++i) {
    const ResponseSet& r = scan[i];
    std::vector<std::string> row = {
        f17(xs[i]),
        f17(r.gamma_as.real()), f17(r.gamma_as.imag()),
        f17(r.g_raman.real()),  f17(r.g_raman.imag()),
        f17(r.kappa_s.real()),  f17(r.kappa_s.imag()),
        f17(r.kappa_as.real()), f17(r.kappa_as.imag())};
    for (int a = 0; a < 6; ++a) row.push_back(f17(std::abs(r.xi_s[a])));
    for (int a = 0; a < 6; ++a) row.push_back(f17(std::abs(r.xi_as[a])));
    t.rows.push_back(std::move(row));
  }
  return t;
}

void run_coefficient_scan(const RunConfig& cfg, Emitter& em) {
  if (cfg.scan == ScanVariable::Omega) {
    auto grid = uniform_grid(cfg.omega.min, cfg.omega.max, cfg.omega.count);
    auto scan = coefficient_scan_omega(cfg.params, grid, cfg.threads);
    em.csv("coefficients_vs_omega.csv",
           response_table(scan, grid, "omega_over_gamma31"));
    if (cfg.emit_gnuplot)
      emit_gnuplot_script(em.dir, "coefficients_vs_omega",
                          "coefficients_vs_omega.csv", 2, "Re gamma_as");
  } else {
    auto grid =
        uniform_grid(cfg.omega_d.min, cfg.omega_d.max, cfg.omega_d.count);
    auto scan = coefficient_scan_drive(cfg.params, grid, cfg.scan_omega_at,
                                       cfg.threads);
    em.csv("coefficients_vs_omega_d.csv",
           response_table(scan, grid, "omega_d_over_gamma31"));
    if (cfg.emit_gnuplot)
      emit_gnuplot_script(em.dir, "coefficients_vs_omega_d",
                          "coefficients_vs_omega_d.csv", 6, "Re kappa_s");
  }
}

void run_drive_sweep(const RunConfig& cfg, Emitter& em) {
  auto dgrid =
      uniform_grid(cfg.omega_d.min, cfg.omega_d.max, cfg.omega_d.count);
  auto wgrid = fft_grid(cfg.omega);
  auto rows =
      drive_sweep_rates(cfg.params, dgrid, wgrid, cfg.nz, cfg.threads);
  double hz = cfg.params.gamma31_hz;
  CsvTable t;
  t.header = {"omega_d_over_gamma31",
              "rs_d_gamma31", "rs_f_gamma31", "ras_d_gamma31",
              "ras_f_gamma31", "rs_d_per_s", "rs_f_per_s", "ras_d_per_s",
              "ras_f_per_s", "occupancy", "rydberg_valid"};
  for (const auto& r : rows)
    t.rows.push_back({f17(r.omega_d), f17(r.rs_d), f17(r.rs_f), f17(r.ras_d),
                      f17(r.ras_f), f17(r.rs_d * hz), f17(r.rs_f * hz),
                      f17(r.ras_d * hz), f17(r.ras_f * hz), f17(r.occupancy),
                      r.rydberg_valid ? "1" : "0"});
  em.csv("rates_vs_omega_d.csv", t);
  if (cfg.emit_gnuplot)
    emit_gnuplot_script(em.dir, "rates_vs_omega_d", "rates_vs_omega_d.csv", 2,
                        "Stokes deterministic rate");
}

void run_g2(const RunConfig& cfg, Emitter& em, ojson& manifest_extra) {
  auto wgrid = fft_grid(cfg.omega);
  SpectralTable sp = spectral_rates(cfg.params, wgrid, cfg.nz, cfg.threads);
  CsvTable st;
  st.header = {"omega_over_gamma31", "b2", "c2",
               "fs_quadrature", "fas_quadrature", "re_x", "im_x", "masked"};
  for (size_t i = 0; i < wgrid.size(); ++i)
    st.rows.push_back({f17(sp.omega[i]), f17(sp.b2[i]), f17(sp.c2[i]),
                       f17(sp.fs[i]), f17(sp.fas[i]), f17(sp.X[i].real()),
                       f17(sp.X[i].imag()),
                       sp.masked[i] ? "1" : "0"});
  em.csv("spectral_rates.csv", st);

  CorrelationResult corr =
      correlation_g2(cfg.params, wgrid, cfg.nz, cfg.threads);
  CsvTable gt;
  gt.header = {"tau_gamma31", "re_phi", "im_phi", "g2"};
  for (size_t i = 0; i < corr.tau.size(); ++i) {
    if (corr.tau[i] > cfg.tau.max) break;
    gt.rows.push_back({f17(corr.tau[i]), f17(corr.phi[i].real()),
                       f17(corr.phi[i].imag()), f17(corr.g2[i])});
  }
  em.csv("g2_vs_tau.csv", gt);
  if (cfg.emit_gnuplot)
    emit_gnuplot_script(em.dir, "g2_vs_tau", "g2_vs_tau.csv", 4, "g2");

  OscillationEstimate osc =
      dominant_oscillation(corr, std::abs(cfg.params.omega_c));
  manifest_extra["g2"] = {
      {"rs_gamma31", corr.rs},
      {"ras_gamma31", corr.ras},
      {"dominant_oscillation_gamma31", osc.frequency},
      {"oscillation_bin_gamma31", osc.bin_width},
  };
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& log) {
  cfg.validate();
  auto t0 = std::chrono::steady_clock::now();
  Emitter em{cfg, fs::path(cfg.output_dir)};
  fs::create_directories(em.dir);

  ojson manifest;
  manifest["mode"] = mode_name(cfg.mode);
  std::string canon = canonical_config_json(cfg);
  manifest["input_hash_fnv1a64"] = fnv1a64(canon);
  manifest["config"] = ojson::parse(canon);

  // advisory mean-field validity at the configured drive
  if (std::norm(cfg.params.omega_d) > 0.0) {
    RydbergAssessment ra = assess_rydberg(cfg.params);
    manifest["rydberg"] = {{"r_blockade_cm", ra.r_blockade},
                           {"shift_s_gamma31", ra.shift_s},
                           {"occupancy", ra.occupancy},
                           {"mean_field_valid", ra.valid}};
    if (!ra.valid)
      log << "note: mean-field validity exceeded (occupancy "
          << ra.occupancy << " > 1)\n";
  }

  ojson extra = ojson::object();
  switch (cfg.mode) {
    case Mode::SteadyState:
      run_steady_state(cfg, em);
      break;
    case Mode::ValidityCurve:
      run_validity_curve(cfg, em);
      break;
    case Mode::CoefficientScan:
      run_coefficient_scan(cfg, em);
      break;
    case Mode::DriveSweep:
      run_drive_sweep(cfg, em);
      break;
    case Mode::G2:
      run_g2(cfg, em, extra);
      break;
    case Mode::FullReport:
      run_steady_state(cfg, em);
      run_validity_curve(cfg, em);
      run_coefficient_scan(cfg, em);
      run_drive_sweep(cfg, em);
      run_g2(cfg, em, extra);
      break;
  }
  for (auto& [k, v] : extra.items()) manifest[k] = v;
  manifest["artifacts"] = em.artifacts;
  auto t1 = std::chrono::steady_clock::now();
  manifest["elapsed_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

  if (cfg.emit_json) {
    std::ofstream mf(em.dir / "manifest.json", std::ios::binary);
    mf << manifest.dump(2) << "\n";
  }
  log << "ok: " << mode_name(cfg.mode) << " -> " << cfg.output_dir << "\n";
  return 0;
}

}  // namespace sfwm
