// Compares the OpenMP Monte Carlo kernel against the serial reference on a
// table-sized workload and verifies that both produce the identical report.
//
// Usage: cir_bench [replications]   (default 400)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cir/csv.hpp"
#include "cir/montecarlo.hpp"

using namespace cir;

namespace {

double time_seconds(const std::function<MonteCarloReport()>& fn,
                    MonteCarloReport& out) {
    const auto start = std::chrono::steady_clock::now();
    out = fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    ExperimentConfig cfg;
    cfg.params = validate_params(1, 1, 1, 1);
    cfg.sim.horizon = 200.0;
    cfg.sim.dt = 0.01;
    cfg.replications = argc > 1 ? std::atoi(argv[1]) : 400;
    cfg.checkpoints = {10.0, 50.0, 100.0, 150.0, 200.0};
    cfg.base_seed = 7777;

    if (cfg.replications < 1) {
        std::fprintf(stderr, "replication count must be positive\n");
        return 2;
    }

#ifdef _OPENMP
    const int threads = omp_get_max_threads();
#else
    const int threads = 1;
#endif
    std::printf("workload: %d replications x %lld steps, %d worker(s) available\n",
                cfg.replications, static_cast<long long>(cfg.sim.steps()), threads);

    MonteCarloReport serial_report, parallel_report;
    const double serial_s =
        time_seconds([&] { return run_experiment_serial(cfg); }, serial_report);
    std::printf("serial reference: %8.3f s\n", serial_s);

    const double parallel_s =
        time_seconds([&] { return run_experiment(cfg, threads); }, parallel_report);
    std::printf("openmp kernel:    %8.3f s  (speedup %.2fx)\n", parallel_s,
                serial_s / parallel_s);

    const bool identical =
        report_to_csv(serial_report) == report_to_csv(parallel_report);
    std::printf("reports byte-identical: %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
