#pragma once

#include <filesystem>
#include <string>

#include "cir/montecarlo.hpp"

namespace cir {

// Declarative mirror of ExperimentConfig, parsed from a flat `key = value`
// file. Recognized keys:
//
//   a, b, sigma, r0, horizon, dt, scheme, replications,
//   checkpoints (comma-separated), base_seed, estimators, inv_floor, out
//
// `scheme` is `euler` or `implicit`; `estimators` is `mle`, `alt` or `both`
// (or a comma-separated subset). Unknown keys are rejected. `out` names the
// report CSV file and is required. Lines starting with `#` are comments.
struct RunConfig {
    ExperimentConfig experiment;
    std::string out;
};

RunConfig parse_run_config(const std::string& text);
RunConfig load_run_config(const std::filesystem::path& file);

}  // namespace cir
