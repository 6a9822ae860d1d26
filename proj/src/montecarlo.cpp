#include "cir/montecarlo.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cir/rng.hpp"
#include "cir/statistics.hpp"

namespace cir {

namespace {

struct EstimateOutcome {
    bool ok = false;
    double a_est = 0.0;
    double b_est = 0.0;
    ErrorKind error = ErrorKind::invalid_config;
};

// Per-replication estimates for every (estimator, checkpoint) pair.
struct RepOutcome {
    std::vector<EstimateOutcome> mle;
    std::vector<EstimateOutcome> alt;
};

EstimateOutcome capture(const DriftEstimate& est) {
    return EstimateOutcome{true, est.a_est, est.b_est, {}};
}

RepOutcome run_replication(const ExperimentConfig& cfg, int rep_index) {
    SimConfig sim = cfg.sim;
    sim.horizon = cfg.checkpoints.back();
    sim.store_noise = false;

    const Path path = simulate_path(
        cfg.params, sim, derive_replication_seed(cfg.base_seed,
                                                 static_cast<std::uint64_t>(rep_index)));
    const auto stats = checkpoint_statistics(path, cfg.checkpoints, cfg.inv_floor);

    RepOutcome out;
    if (cfg.run_mle) {
        out.mle.reserve(stats.size());
        for (const auto& s : stats) {
            try {
                out.mle.push_back(capture(mle_estimate(s)));
            } catch (const CirError& e) {
                out.mle.push_back(EstimateOutcome{false, 0.0, 0.0, e.kind()});
            }
        }
    }
    if (cfg.run_alt) {
        out.alt.reserve(stats.size());
        for (const auto& s : stats) {
            try {
                out.alt.push_back(capture(alt_estimate(s, cfg.params.sigma)));
            } catch (const CirError& e) {
                out.alt.push_back(EstimateOutcome{false, 0.0, 0.0, e.kind()});
            }
        }
    }
    return out;
}

// Deterministic ordered aggregation over the outcome table. Failure of a
// whole cell is an error, except for likelihood cells outside the Feller
// regime where total failure is the documented behavior: those cells are
// emitted empty, warning flag set.
MonteCarloReport aggregate(const ExperimentConfig& cfg,
                           const std::vector<RepOutcome>& outcomes) {
    MonteCarloReport report;
    report.config = cfg;

    const bool feller = cfg.params.feller();
    const double nan = std::numeric_limits<double>::quiet_NaN();

    for (const EstimatorKind kind : {EstimatorKind::mle, EstimatorKind::alternative}) {
        if ((kind == EstimatorKind::mle && !cfg.run_mle) ||
            (kind == EstimatorKind::alternative && !cfg.run_alt)) {
            continue;
        }
        for (const char param : {'a', 'b'}) {
            for (std::size_t k = 0; k < cfg.checkpoints.size(); ++k) {
                ReportCell cell;
                cell.estimator = kind;
                cell.param = param;
                cell.horizon = cfg.checkpoints[k];
                cell.feller_warning = kind == EstimatorKind::mle && !feller;

                for (const auto& rep : outcomes) {
                    const auto& slot =
                        kind == EstimatorKind::mle ? rep.mle[k] : rep.alt[k];
                    if (slot.ok) {
                        cell.values.push_back(param == 'a' ? slot.a_est : slot.b_est);
                    } else {
                        ++cell.n_fail;
                        ++cell.failure_kinds[slot.error];
                    }
                }
                cell.n_ok = static_cast<int>(cell.values.size());

                if (cell.n_ok > 0) {
                    const Summary s = summarize(cell.values);
                    cell.mean = s.mean;
                    cell.stddev = s.stddev;
                } else if (cell.feller_warning) {
                    cell.mean = nan;
                    cell.stddev = nan;
                } else {
                    throw CirError(
                        ErrorKind::all_replications_failed,
                        std::string("every replication failed for cell (") +
                            std::string(to_string(kind)) + ", " + param + ", T=" +
                            std::to_string(cell.horizon) + ")");
                }
                report.cells.push_back(std::move(cell));
            }
        }
    }
    return report;
}

}  // namespace

void validate_experiment(const ExperimentConfig& cfg) {
    validate_params(cfg.params);
    validate_sim_config(cfg.sim);
    if (cfg.replications < 1) {
        throw CirError(ErrorKind::invalid_config, "replications must be >= 1");
    }
    if (!cfg.run_mle && !cfg.run_alt) {
        throw CirError(ErrorKind::invalid_config, "no estimator requested");
    }
    if (cfg.checkpoints.empty()) {
        throw CirError(ErrorKind::invalid_config, "at least one checkpoint required");
    }
    if (!(cfg.inv_floor >= 0.0)) {
        throw CirError(ErrorKind::invalid_config, "inv_floor must be >= 0");
    }
    double previous = 0.0;
    for (const double ck : cfg.checkpoints) {
        if (ck <= previous) {
            throw CirError(ErrorKind::invalid_config,
                           "checkpoints must be strictly ascending and positive");
        }
        previous = ck;
        const double steps = ck / cfg.sim.dt;
        if (std::abs(ck - std::round(steps) * cfg.sim.dt) > 1e-9) {
            throw CirError(ErrorKind::off_grid_checkpoint,
                           "checkpoint " + std::to_string(ck) +
                               " is not a multiple of dt");
        }
    }
    if (cfg.checkpoints.back() > cfg.sim.horizon + 1e-9) {
        throw CirError(ErrorKind::invalid_config,
                       "checkpoints must not exceed the horizon");
    }
}

MonteCarloReport run_experiment_serial(const ExperimentConfig& cfg) {
    validate_experiment(cfg);
    std::vector<RepOutcome> outcomes(static_cast<std::size_t>(cfg.replications));
    for (int i = 0; i < cfg.replications; ++i) {
        outcomes[static_cast<std::size_t>(i)] = run_replication(cfg, i);
    }
    return aggregate(cfg, outcomes);
}

MonteCarloReport run_experiment(const ExperimentConfig& cfg, int num_threads) {
    validate_experiment(cfg);
    std::vector<RepOutcome> outcomes(static_cast<std::size_t>(cfg.replications));

#ifdef _OPENMP
    const int threads = num_threads > 0 ? num_threads : omp_get_max_threads();
    bool failed = false;
    std::string failure;
// Replications are independent; each slot is written exactly once, so the
// schedule never influences the collected outcomes.
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int i = 0; i < cfg.replications; ++i) {
        try {
            outcomes[static_cast<std::size_t>(i)] = run_replication(cfg, i);
        } catch (const std::exception& e) {
#pragma omp critical
            {
                failed = true;
                failure = e.what();
            }
        }
    }
    if (failed) {
        throw CirError(ErrorKind::invalid_config,
                       "replication failed unexpectedly: " + failure);
    }
#else
    (void)num_threads;
    for (int i = 0; i < cfg.replications; ++i) {
        outcomes[static_cast<std::size_t>(i)] = run_replication(cfg, i);
    }
#endif

    return aggregate(cfg, outcomes);
}

Summary summarize(std::span<const double> values) {
    if (values.empty()) {
        throw CirError(ErrorKind::empty_input, "summarize needs a nonempty list");
    }
    // Welford's online recurrence; the tests cross-check it against a
    // two-pass reference.
    double mean = 0.0;
    double m2 = 0.0;
    double count = 0.0;
    for (const double x : values) {
        count += 1.0;
        const double delta = x - mean;
        mean += delta / count;
        m2 += delta * (x - mean);
    }
    return Summary{mean, std::sqrt(m2 / count)};
}

}  // namespace cir
