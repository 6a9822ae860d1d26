#include "cir/simulate.hpp"

#include <cmath>
#include <string>

#include "cir/rng.hpp"

namespace cir {

std::string_view to_string(Scheme scheme) noexcept {
    switch (scheme) {
        case Scheme::euler_full_truncation:
            return "euler_full_truncation";
        case Scheme::drift_implicit_sqrt:
            return "drift_implicit_sqrt";
    }
    return "unknown";
}

std::int64_t SimConfig::steps() const {
    return std::llround(horizon / dt);
}

void validate_sim_config(const SimConfig& cfg) {
    if (!(cfg.horizon > 0.0)) {
        throw CirError(ErrorKind::invalid_config, "horizon must be positive");
    }
    if (!(cfg.dt > 0.0)) {
        throw CirError(ErrorKind::invalid_config, "dt must be positive");
    }
    if (cfg.dt > cfg.horizon) {
        throw CirError(ErrorKind::invalid_config, "dt must not exceed the horizon");
    }
    if (cfg.steps() < 1) {
        throw CirError(ErrorKind::invalid_config, "grid needs at least one step");
    }
}

double euler_full_truncation_step(double v, const ModelParams& params, double dt,
                                  double dw) {
    const double vp = std::max(v, 0.0);
    const double raw = v + (params.a - params.b * vp) * dt +
                       params.sigma * std::sqrt(vp) * dw;
    return std::max(raw, 0.0);
}

double drift_implicit_sqrt_step(double y, const ModelParams& params, double dt,
                                double dw) {
    const double denom = 1.0 + 0.5 * params.b * dt;
    const double u = (y + 0.5 * params.sigma * dw) / (2.0 * denom);
    const double c = (params.a - 0.25 * params.sigma * params.sigma) * dt /
                     (2.0 * denom);
    return u + std::sqrt(u * u + c);
}

Path simulate_path(const ModelParams& params, const SimConfig& cfg,
                   std::uint64_t seed) {
    validate_params(params);
    validate_sim_config(cfg);
    if (cfg.scheme == Scheme::drift_implicit_sqrt &&
        !(4.0 * params.a > params.sigma * params.sigma)) {
        throw CirError(ErrorKind::scheme_inadmissible,
                       "drift_implicit_sqrt requires 4a > sigma^2");
    }

    const auto n = static_cast<std::size_t>(cfg.steps());
    Path path;
    path.params_used = params;
    path.scheme_used = cfg.scheme;
    path.times.resize(n + 1);
    path.values.resize(n + 1);
    if (cfg.store_noise) {
        path.noise.resize(n);
    }

    for (std::size_t i = 0; i <= n; ++i) {
        path.times[i] = static_cast<double>(i) * cfg.dt;
    }
    path.values[0] = params.r0;

    GaussianStream gauss(seed);
    const double sqrt_dt = std::sqrt(cfg.dt);

    if (cfg.scheme == Scheme::euler_full_truncation) {
        double v = params.r0;
        for (std::size_t i = 0; i < n; ++i) {
            const double dw = sqrt_dt * gauss.next();
            if (cfg.store_noise) {
                path.noise[i] = dw;
            }
            v = euler_full_truncation_step(v, params, cfg.dt, dw);
            path.values[i + 1] = v;
        }
    } else {
        double y = std::sqrt(params.r0);
        for (std::size_t i = 0; i < n; ++i) {
            const double dw = sqrt_dt * gauss.next();
            if (cfg.store_noise) {
                path.noise[i] = dw;
            }
            y = drift_implicit_sqrt_step(y, params, cfg.dt, dw);
            path.values[i + 1] = y * y;
        }
    }

    return path;
}

}  // namespace cir
