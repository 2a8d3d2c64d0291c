#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sfwm/run.hpp"

namespace {

void write_error_json(const std::string& out_dir, const sfwm::SimError& e) {
  try {
    std::filesystem::create_directories(out_dir);
    nlohmann::ordered_json j;
    j["error"] = e.kind_name();
    j["message"] = e.what();
    j["exit_code"] = e.exit_code();
    if (e.kind() == sfwm::ErrKind::ZeroRateNormalization)
      j["status"] = "no-emission";
    std::ofstream f(std::filesystem::path(out_dir) / "error.json",
                    std::ios::binary);
    f << j.dump(2) << "\n";
  } catch (...) {
    // reporting must not mask the original failure
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coupled Stokes / anti-Stokes pair-generation simulator"};
  std::string mode_str, config_path, preset_name, out_dir;
  int threads = -1, omega_points = 0;
  long seed = 0;  // reserved; the pipeline is deterministic

  app.add_option("mode", mode_str,
                 "steady-state | validity-curve | coefficient-scan | "
                 "drive-sweep | g2 | full-report");
  app.add_option("--config", config_path, "JSON or TOML config file");
  app.add_option("--preset", preset_name,
                 "figA | figB | figC | figD | figF_a | figF_b");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--threads", threads, "worker threads (0 = hardware)");
  app.add_option("--omega-points", omega_points, "override omega grid count");
  app.add_option("--seed", seed, "reserved for future stochastic extensions");
  CLI11_PARSE(app, argc, argv);

  std::string effective_out = "out";
  try {
    sfwm::RunConfig cfg;
    if (!config_path.empty()) {
      cfg = sfwm::load_config(config_path);
      if (!preset_name.empty())
        throw sfwm::SimError(sfwm::ErrKind::ValidationError,
                             "--preset conflicts with --config; put the "
                             "preset into the config file instead");
    } else if (!preset_name.empty()) {
      cfg = sfwm::preset(preset_name);
    } else if (mode_str.empty()) {
      throw sfwm::SimError(sfwm::ErrKind::ValidationError,
                           "need a mode, a --config or a --preset");
    }
    if (!mode_str.empty()) cfg.mode = sfwm::parse_mode(mode_str);
    if (!out_dir.empty()) {
      cfg.output_dir = out_dir;
    } else if (const char* env = std::getenv("SIMULATE_OUT_DIR");
               env && config_path.empty()) {
      cfg.output_dir = env;
    }
    if (threads >= 0) cfg.threads = threads;
    if (omega_points > 0) cfg.omega.count = omega_points;
    effective_out = cfg.output_dir;
    return sfwm::run(cfg, std::cout);
  } catch (const sfwm::SimError& e) {
    write_error_json(effective_out, e);
    std::cerr << e.kind_name() << ": " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
