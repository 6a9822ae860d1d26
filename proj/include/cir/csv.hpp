#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "cir/montecarlo.hpp"
#include "cir/simulate.hpp"
#include "cir/statistics.hpp"

namespace cir {

// Shortest decimal representation that parses back to the identical double,
// so reproducibility survives the text layer.
std::string format_double(double v);

// Path CSV: header `t,r` (`t,r,dW` when increments are stored), one row per
// grid point; the dW column is empty on the final row.
std::string path_to_csv(const Path& path);
Path path_from_csv(const std::string& text);
Path read_path_csv(const std::filesystem::path& file);

// Statistics CSV: one row per checkpoint, empty fields for absent optionals.
std::string statistics_to_csv(std::span<const PathStatistics> stats);

// Report CSV, long format: one row per cell, stable row ordering
// (estimator, param, T ascending). Cells with no successful replication
// have empty mean/std fields.
std::string report_to_csv(const MonteCarloReport& report);

// Aligned text table for terminal output, grouped per estimated parameter
// with one column per checkpoint.
std::string report_to_table(const MonteCarloReport& report);

void write_file(const std::filesystem::path& file, const std::string& content);
std::string read_file(const std::filesystem::path& file);

}  // namespace cir
