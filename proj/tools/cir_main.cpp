// Command-line front end: simulate paths, estimate drift parameters from
// path files, run Monte Carlo experiments from config files, and emit the
// stationary density as plot-ready data.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cir/config.hpp"
#include "cir/csv.hpp"
#include "cir/estimators.hpp"
#include "cir/model.hpp"
#include "cir/montecarlo.hpp"
#include "cir/simulate.hpp"
#include "cir/statistics.hpp"

namespace {

struct SimulateArgs {
    double a = 0, b = 0, sigma = 0, r0 = 0;
    double horizon = 0, dt = 0.01;
    std::uint64_t seed = 0;
    std::string scheme = "euler";
    bool store_noise = false;
    std::string out;
};

int cmd_simulate(const SimulateArgs& args) {
    cir::SimConfig cfg;
    cfg.horizon = args.horizon;
    cfg.dt = args.dt;
    cfg.store_noise = args.store_noise;
    if (args.scheme == "euler") {
        cfg.scheme = cir::Scheme::euler_full_truncation;
    } else if (args.scheme == "implicit") {
        cfg.scheme = cir::Scheme::drift_implicit_sqrt;
    } else {
        throw cir::CirError(cir::ErrorKind::invalid_config,
                            "--scheme must be 'euler' or 'implicit'");
    }
    const auto params = cir::validate_params(args.a, args.b, args.sigma, args.r0);
    const cir::Path path = cir::simulate_path(params, cfg, args.seed);
    cir::write_file(args.out, cir::path_to_csv(path));
    return 0;
}

struct EstimateArgs {
    std::string in;
    double sigma = 0;
    double inv_floor = cir::kDefaultInvFloor;
    std::string estimator = "both";
    std::string stats_out;
};

void append_estimate_row(std::string& out, const char* name,
                         const cir::DriftEstimate* est,
                         const std::vector<std::string>& warnings) {
    out += name;
    out += ',';
    if (est != nullptr) {
        out += cir::format_double(est->a_est);
        out += ',';
        out += cir::format_double(est->b_est);
        out += ',';
        try {
            const auto am = cir::to_alpha_mu(*est);
            out += cir::format_double(am.alpha_est);
            out += ',';
            out += cir::format_double(am.mu_est);
        } catch (const cir::CirError&) {
            out += ',';
        }
        out += ',';
        out += cir::format_double(est->denominator);
    } else {
        out += ",,,,";
    }
    out += ',';
    for (std::size_t i = 0; i < warnings.size(); ++i) {
        if (i > 0) {
            out += ';';
        }
        out += warnings[i];
    }
    out += '\n';
}

int cmd_estimate(const EstimateArgs& args) {
    if (args.estimator != "mle" && args.estimator != "alt" &&
        args.estimator != "both") {
        throw cir::CirError(cir::ErrorKind::invalid_config,
                            "--estimator must be 'mle', 'alt' or 'both'");
    }
    if (!(args.sigma > 0)) {
        throw cir::CirError(cir::ErrorKind::non_positive_parameter,
                            "parameter 'sigma' must be positive");
    }
    const cir::Path path = cir::read_path_csv(args.in);
    const cir::PathStatistics stats = cir::path_statistics(path, args.inv_floor);
    if (!args.stats_out.empty()) {
        const std::vector<cir::PathStatistics> one{stats};
        cir::write_file(args.stats_out, cir::statistics_to_csv(one));
    }

    std::string out = "estimator,a_est,b_est,alpha_est,mu_est,denominator,warnings\n";
    if (args.estimator != "alt") {
        std::vector<std::string> warnings;
        try {
            const auto est = cir::mle_estimate(stats);
            if (2.0 * est.a_est <= args.sigma * args.sigma) {
                warnings.push_back("feller");
            }
            append_estimate_row(out, "mle", &est, warnings);
        } catch (const cir::CirError& e) {
            warnings.push_back(std::string(cir::to_string(e.kind())));
            append_estimate_row(out, "mle", nullptr, warnings);
        }
    }
    if (args.estimator != "mle") {
        std::vector<std::string> warnings;
        try {
            const auto est = cir::alt_estimate(stats, args.sigma);
            append_estimate_row(out, "alternative", &est, warnings);
        } catch (const cir::CirError& e) {
            warnings.push_back(std::string(cir::to_string(e.kind())));
            append_estimate_row(out, "alternative", nullptr, warnings);
        }
    }
    std::fputs(out.c_str(), stdout);
    return 0;
}

int cmd_montecarlo(const std::string& config_file, int threads) {
    const cir::RunConfig run = cir::load_run_config(config_file);
    const cir::MonteCarloReport report = cir::run_experiment(run.experiment, threads);
    cir::write_file(run.out, cir::report_to_csv(report));
    std::fputs(cir::report_to_table(report).c_str(), stdout);
    return 0;
}

struct DensityArgs {
    double a = 0, b = 0, sigma = 0;
    double xmax = 0;
    int points = 0;
    std::string out;
};

int cmd_density(const DensityArgs& args) {
    const auto params = cir::validate_params(args.a, args.b, args.sigma, 1.0);
    if (!(args.xmax > 0) || args.points < 1) {
        throw cir::CirError(cir::ErrorKind::invalid_config,
                            "--xmax must be positive and --points >= 1");
    }
    const auto law = cir::stationary_law(params);
    std::string out = "x,p_inf\n";
    for (int k = 1; k <= args.points; ++k) {
        const double x = args.xmax * static_cast<double>(k) /
                         static_cast<double>(args.points);
        out += cir::format_double(x);
        out += ',';
        out += cir::format_double(cir::stationary_density(x, law));
        out += '\n';
    }
    if (args.out.empty()) {
        std::fputs(out.c_str(), stdout);
    } else {
        cir::write_file(args.out, out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cox-Ingersoll-Ross simulation and drift estimation toolkit"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "simulate one sample path to CSV");
    simulate->add_option("--a", sim.a, "drift level a")->required();
    simulate->add_option("--b", sim.b, "mean-reversion rate b")->required();
    simulate->add_option("--sigma", sim.sigma, "volatility sigma")->required();
    simulate->add_option("--r0", sim.r0, "initial value")->required();
    simulate->add_option("--T", sim.horizon, "time horizon")->required();
    simulate->add_option("--dt", sim.dt, "step size (default 0.01)");
    simulate->add_option("--seed", sim.seed, "64-bit seed")->required();
    simulate->add_option("--scheme", sim.scheme, "euler | implicit");
    simulate->add_flag("--store-noise", sim.store_noise,
                       "keep the Wiener increments in the CSV");
    simulate->add_option("--out", sim.out, "output CSV file")->required();

    EstimateArgs est;
    auto* estimate =
        app.add_subcommand("estimate", "estimate (a, b) from a path CSV");
    estimate->add_option("--in", est.in, "path CSV file")->required();
    estimate->add_option("--sigma", est.sigma, "known volatility sigma")->required();
    estimate->add_option("--inv-floor", est.inv_floor,
                         "reliability floor for 1/r statistics");
    estimate->add_option("--estimator", est.estimator, "mle | alt | both");
    estimate->add_option("--stats", est.stats_out,
                         "also write the path statistics CSV here");

    std::string config_file;
    int threads = 0;
    auto* montecarlo = app.add_subcommand(
        "montecarlo", "run a replicated experiment from a config file");
    montecarlo->add_option("config", config_file, "key = value config file")
        ->required();
    montecarlo->add_option("--threads", threads,
                           "worker threads (0 = all available)");

    DensityArgs den;
    auto* density =
        app.add_subcommand("density", "tabulate the stationary density");
    density->add_option("--a", den.a, "drift level a")->required();
    density->add_option("--b", den.b, "mean-reversion rate b")->required();
    density->add_option("--sigma", den.sigma, "volatility sigma")->required();
    density->add_option("--xmax", den.xmax, "largest abscissa")->required();
    density->add_option("--points", den.points, "number of grid points")->required();
    density->add_option("--out", den.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (simulate->parsed()) {
            return cmd_simulate(sim);
        }
        if (estimate->parsed()) {
            return cmd_estimate(est);
        }
        if (montecarlo->parsed()) {
            return cmd_montecarlo(config_file, threads);
        }
        if (density->parsed()) {
            return cmd_density(den);
        }
    } catch (const cir::CirError& e) {
        std::cerr << "error (" << cir::to_string(e.kind()) << "): " << e.what()
                  << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
