#pragma once
#include <ostream>

#include "sfwm/config.hpp"

namespace sfwm {

// Executes the pipeline for cfg.mode, writes CSV artifacts plus a JSON
// manifest into cfg.output_dir, and returns 0. Failures surface as
// SimError; the CLI maps them to exit codes and an error JSON.
int run(const RunConfig& cfg, std::ostream& log);

}  // namespace sfwm
