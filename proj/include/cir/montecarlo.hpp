#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "cir/estimators.hpp"
#include "cir/model.hpp"
#include "cir/simulate.hpp"

namespace cir {

struct ExperimentConfig {
    ModelParams params;
    SimConfig sim;  // horizon, dt, scheme; noise storage is not used here
    int replications = 100;
    std::vector<double> checkpoints;  // ascending, on the grid
    std::uint64_t base_seed = 0;
    bool run_mle = true;
    bool run_alt = true;
    double inv_floor = kDefaultInvFloor;
};

// Throws on any violated invariant: bad params, off-grid or non-ascending
// checkpoints, checkpoints beyond the horizon, empty estimator set.
void validate_experiment(const ExperimentConfig& cfg);

// One aggregation cell: (estimator, parameter, checkpoint horizon).
// `values` keeps the successful estimates in replication order so trend
// diagnostics (e.g. mean absolute error) can be recomputed downstream.
struct ReportCell {
    EstimatorKind estimator;
    char param;      // 'a' or 'b'
    double horizon;  // checkpoint T
    double mean = 0.0;    // NaN when n_ok == 0
    double stddev = 0.0;  // population convention (divisor n); NaN when n_ok == 0
    int n_ok = 0;
    int n_fail = 0;
    std::map<ErrorKind, int> failure_kinds;
    // Set on likelihood-estimator cells when 2a <= sigma^2: the estimator is
    // not well-defined in that regime and must never be reported silently.
    bool feller_warning = false;
    std::vector<double> values;
};

struct MonteCarloReport {
    ExperimentConfig config;
    std::vector<ReportCell> cells;  // ordered (estimator, param, T ascending)
};

// Replication i is simulated with seed derive_replication_seed(base_seed, i);
// each replication simulates one path to the last checkpoint and evaluates
// both estimators at every checkpoint from prefix statistics of that path.
// Failed replications are excluded from a cell's mean/std and counted by
// error kind. The report is a pure function of the config: worker count and
// scheduling never change a single bit of it.
//
// `num_threads` <= 0 uses the OpenMP default. run_experiment_serial is the
// plain-loop reference implementation the parallel kernel is tested against.
MonteCarloReport run_experiment(const ExperimentConfig& cfg, int num_threads = 0);
MonteCarloReport run_experiment_serial(const ExperimentConfig& cfg);

struct Summary {
    double mean;
    double stddev;  // divisor n
};

Summary summarize(std::span<const double> values);

}  // namespace cir
