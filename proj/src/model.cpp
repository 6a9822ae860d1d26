#include "cir/model.hpp"

#include <cmath>
#include <string>

#include "cir/quadrature.hpp"

namespace cir {

namespace {

void require_positive(double value, const char* name) {
    // !(value > 0) also rejects NaN
    if (!(value > 0.0)) {
        throw CirError(ErrorKind::non_positive_parameter,
                       std::string("parameter '") + name + "' must be positive, got " +
                           std::to_string(value));
    }
}

}  // namespace

ModelParams validate_params(double a, double b, double sigma, double r0) {
    require_positive(a, "a");
    require_positive(b, "b");
    require_positive(sigma, "sigma");
    require_positive(r0, "r0");
    return ModelParams{a, b, sigma, r0};
}

void validate_params(const ModelParams& params) {
    validate_params(params.a, params.b, params.sigma, params.r0);
}

StationaryLaw stationary_law(const ModelParams& params) {
    validate_params(params);
    const double s2 = params.sigma * params.sigma;
    return StationaryLaw{2.0 * params.a / s2, 2.0 * params.b / s2};
}

double stationary_density(double x, const StationaryLaw& law) {
    if (!(x > 0.0)) {
        return 0.0;
    }
    const double log_density = law.alpha * std::log(law.beta) +
                               (law.alpha - 1.0) * std::log(x) - law.beta * x -
                               std::lgamma(law.alpha);
    return std::exp(log_density);
}

double stationary_moment(MomentKind kind, const ModelParams& params) {
    validate_params(params);
    const double a = params.a;
    const double b = params.b;
    const double s2 = params.sigma * params.sigma;
    switch (kind) {
        case MomentKind::mean:
            return a / b;
        case MomentKind::second:
            return a * a / (b * b) + a * s2 / (2.0 * b * b);
        case MomentKind::inverse_mean:
            if (!params.feller()) {
                throw CirError(ErrorKind::feller_violation,
                               "inverse moment requires 2a > sigma^2");
            }
            return b / (a - s2 / 2.0);
    }
    throw CirError(ErrorKind::invalid_config, "unknown moment kind");
}

double transient_mean(double t, const ModelParams& params) {
    validate_params(params);
    if (t < 0.0 || std::isnan(t)) {
        throw CirError(ErrorKind::negative_time,
                       "transient mean requires t >= 0, got " + std::to_string(t));
    }
    const double level = params.a / params.b;
    return (params.r0 - level) * std::exp(-params.b * t) + level;
}

double stationary_mass(const StationaryLaw& law, double hi, double tol) {
    if (law.alpha >= 1.0) {
        return integrate([&](double x) { return stationary_density(x, law); }, 0.0,
                         hi, tol);
    }
    // u = x^alpha turns beta^alpha x^(alpha-1) e^(-beta x) dx / Gamma(alpha)
    // into the bounded integrand beta^alpha e^(-beta u^(1/alpha)) du / Gamma(alpha+1).
    const double scale =
        std::exp(law.alpha * std::log(law.beta) - std::lgamma(law.alpha + 1.0));
    const double inv_alpha = 1.0 / law.alpha;
    return integrate(
        [&](double u) {
            return u > 0.0 ? scale * std::exp(-law.beta * std::pow(u, inv_alpha))
                           : scale;
        },
        0.0, std::pow(hi, law.alpha), tol);
}

DensityBounds density_quadrature_bounds(const StationaryLaw& law) {
    // Upper cutoff: alpha + 40 sqrt(alpha) + 40 gamma-standard-deviations past
    // the mean leaves tail mass below 1e-12 for alpha up to ~100.
    const double hi = (law.alpha + 40.0 * std::sqrt(law.alpha) + 40.0) / law.beta;
    double lo = 0.0;
    if (law.alpha < 1.0) {
        // The density is singular at 0; cut where the lower tail mass,
        // bounded by (beta lo)^alpha / Gamma(alpha + 1), drops below 1e-13.
        lo = std::exp((std::log(1e-13) + std::lgamma(law.alpha + 1.0)) / law.alpha) /
             law.beta;
    }
    return DensityBounds{lo, hi};
}

}  // namespace cir
