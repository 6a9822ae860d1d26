#pragma once

#include "cir/errors.hpp"

namespace cir {

// Parameters of the square-root diffusion
//
//   dr_t = (a - b r_t) dt + sigma sqrt(r_t) dW_t,   r_0 > 0,
//
// with a, b, sigma > 0. The process is mean-reverting towards a/b and
// stays strictly positive when 2a > sigma^2 (Feller condition); only in
// that regime do the inverse moment and the likelihood-based estimator
// exist.
struct ModelParams {
    double a = 1.0;      // drift level
    double b = 1.0;      // mean-reversion rate
    double sigma = 1.0;  // volatility coefficient
    double r0 = 1.0;     // initial value

    bool feller() const noexcept { return 2.0 * a > sigma * sigma; }
    bool mle_defined() const noexcept { return feller(); }
};

// Front door for ModelParams: rejects any non-positive (or NaN) entry.
ModelParams validate_params(double a, double b, double sigma, double r0);
void validate_params(const ModelParams& params);

// Stationary law of the process: gamma with shape alpha = 2a/sigma^2 and
// rate beta = 2b/sigma^2.
struct StationaryLaw {
    double alpha;
    double beta;
};

StationaryLaw stationary_law(const ModelParams& params);

// Gamma density beta^alpha x^(alpha-1) e^(-beta x) / Gamma(alpha) for
// x > 0, zero otherwise. Evaluated in log space so large shapes do not
// overflow.
double stationary_density(double x, const StationaryLaw& law);

enum class MomentKind { mean, second, inverse_mean };

// Limits of the time averages (1/T) int f(r_t) dt:
//   mean         -> a/b
//   second       -> a^2/b^2 + a sigma^2 / (2 b^2)
//   inverse_mean -> b / (a - sigma^2/2)      (requires 2a > sigma^2)
double stationary_moment(MomentKind kind, const ModelParams& params);

// E r_t = (r0 - a/b) e^(-bt) + a/b.
double transient_mean(double t, const ModelParams& params);

// Truncation interval for quadrature against the stationary density; the
// gamma mass outside [lo, hi] is below 1e-12.
struct DensityBounds {
    double lo;
    double hi;
};

DensityBounds density_quadrature_bounds(const StationaryLaw& law);

// Mass of the stationary density on (0, hi] by adaptive quadrature. For
// alpha < 1 the integrand is singular at zero and plain quadrature cannot
// resolve the corner; the substitution u = x^alpha removes the singularity
// exactly, so the result is accurate for every positive shape.
double stationary_mass(const StationaryLaw& law, double hi, double tol = 1e-12);

}  // namespace cir
