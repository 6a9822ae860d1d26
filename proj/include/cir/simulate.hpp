#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cir/model.hpp"

namespace cir {

enum class Scheme {
    // Explicit Euler with the state floored at zero after each update;
    // never produces a negative value.
    euler_full_truncation,
    // Drift-implicit Euler for y = sqrt(r); strictly positive, admissible
    // only when 4a > sigma^2.
    drift_implicit_sqrt,
};

std::string_view to_string(Scheme scheme) noexcept;

struct SimConfig {
    double horizon = 1.0;  // total time T
    double dt = 0.01;      // uniform step size
    Scheme scheme = Scheme::euler_full_truncation;
    bool store_noise = false;  // keep the Wiener increments on the path

    // Number of steps n = round(T/dt); the grid is t_i = i*dt, i = 0..n.
    std::int64_t steps() const;
};

void validate_sim_config(const SimConfig& cfg);

// A discretized sample path on a uniform grid. `noise` holds the Wiener
// increments dW_i ~ N(0, dt) when they were stored; both schemes driven by
// the same seed consume the identical increment sequence, which allows
// coupled scheme comparisons. Paths loaded from CSV carry no params/scheme.
struct Path {
    std::vector<double> times;   // n+1 grid points
    std::vector<double> values;  // n+1 states, values[0] = r0
    std::vector<double> noise;   // n increments when stored, else empty
    std::optional<ModelParams> params_used;
    std::optional<Scheme> scheme_used;

    bool has_noise() const noexcept { return !noise.empty(); }
};

// One full-truncation Euler update from state v >= 0:
//   raw = v + (a - b v) dt + sigma sqrt(v) dW,  next state = max(raw, 0).
double euler_full_truncation_step(double v, const ModelParams& params, double dt,
                                  double dw);

// One drift-implicit square-root update, acting on y = sqrt(r):
//   u = (y + sigma dW / 2) / (2 (1 + b dt / 2))
//   y' = u + sqrt(u^2 + (a - sigma^2/4) dt / (2 (1 + b dt / 2)))
// and r' = y'^2. Requires 4a > sigma^2 so the constant under the root is
// positive and the approximation stays strictly positive.
double drift_implicit_sqrt_step(double y, const ModelParams& params, double dt,
                                double dw);

// Deterministic function of (params, cfg, seed): the same inputs always
// reproduce the identical path, element for element, regardless of how many
// paths are being generated concurrently elsewhere.
Path simulate_path(const ModelParams& params, const SimConfig& cfg,
                   std::uint64_t seed);

}  // namespace cir
