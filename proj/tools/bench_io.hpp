#pragma once

#include <string>

#include "projdepth/experiment.hpp"

namespace projdepth::cli {

/// Parses and validates the benchmark JSON config. Schema violations are
/// collected and reported together, each prefixed with its JSON path.
ExperimentConfig load_experiment_config(const std::string& path);

/// Writes raw.csv, stats.csv and flows.csv into `out_dir`. Numeric fields are
/// serialized with 17 significant digits, so values round-trip exactly;
/// missing fields stay empty.
void write_experiment_outputs(const ExperimentConfig& cfg,
                              const ExperimentResult& result,
                              const std::string& out_dir);

} // namespace projdepth::cli
