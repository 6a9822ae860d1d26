#include "cir/estimators.hpp"

#include <cmath>
#include <string>

namespace cir {

namespace {

double denominator_tolerance(double horizon) {
    return 1e-12 * std::max(1.0, horizon * horizon);
}

void check_denominator(double d, double horizon) {
    if (!(d > denominator_tolerance(horizon))) {
        throw CirError(ErrorKind::degenerate_denominator,
                       "estimator denominator is degenerate (constant path?): D = " +
                           std::to_string(d));
    }
}

}  // namespace

std::string_view to_string(EstimatorKind kind) noexcept {
    return kind == EstimatorKind::mle ? "mle" : "alternative";
}

DriftEstimate mle_estimate(const PathStatistics& stats) {
    if (!stats.inv_reliable || !stats.int_inv_r || !stats.int_dr_over_r) {
        throw CirError(ErrorKind::unreliable_inverse,
                       "likelihood estimator needs reliable inverse statistics");
    }
    const double t = stats.horizon;
    const double int_r = stats.int_r;
    const double int_inv = *stats.int_inv_r;
    const double int_dr = *stats.int_dr_over_r;
    const double d = int_r * int_inv - t * t;
    check_denominator(d, t);

    const double a_est = (int_r * int_dr - t * (stats.r_end - stats.r_start)) / d;
    const double b_est = ((stats.r_start - stats.r_end) * int_inv + t * int_dr) / d;
    return DriftEstimate{a_est, b_est, EstimatorKind::mle, d};
}

DriftEstimate alt_estimate(const PathStatistics& stats, double sigma) {
    if (!(sigma > 0.0)) {
        throw CirError(ErrorKind::non_positive_parameter,
                       "parameter 'sigma' must be positive");
    }
    const double t = stats.horizon;
    const double d = t * stats.int_r2 - stats.int_r * stats.int_r;
    check_denominator(d, t);

    const double half_s2 = sigma * sigma / 2.0;
    const double a_est = half_s2 * (stats.int_r * stats.int_r) / d;
    const double b_est = half_s2 * t * stats.int_r / d;
    return DriftEstimate{a_est, b_est, EstimatorKind::alternative, d};
}

AlphaMuEstimate to_alpha_mu(const DriftEstimate& est) {
    if (std::abs(est.b_est) <= 1e-12) {
        throw CirError(ErrorKind::zero_mean_reversion,
                       "mean-reversion estimate is zero; mu = a/b undefined");
    }
    return AlphaMuEstimate{est.b_est, est.a_est / est.b_est};
}

ResidualPair residual_decomposition(const Path& path, const ModelParams& true_params,
                                    double inv_floor) {
    if (!path.has_noise()) {
        throw CirError(ErrorKind::missing_noise,
                       "residual decomposition needs the stored Wiener increments");
    }
    const PathStatistics stats = path_statistics(path, inv_floor);
    if (!stats.inv_reliable || !stats.int_inv_r) {
        throw CirError(ErrorKind::unreliable_inverse,
                       "residual decomposition needs a path bounded away from zero");
    }
    const double t = stats.horizon;
    const double d = stats.int_r * *stats.int_inv_r - t * t;
    check_denominator(d, t);

    // Left-endpoint stochastic sums driving both remainders.
    CompensatedSum s_inv, s_sqrt;
    for (std::size_t i = 0; i + 1 < path.values.size(); ++i) {
        const double r_i = path.values[i];
        const double dw = path.noise[i];
        s_inv.add(dw / std::sqrt(r_i));
        s_sqrt.add(std::sqrt(r_i) * dw);
    }

    const double sigma = true_params.sigma;
    const double r_a = sigma * (s_inv.value() * stats.int_r - t * s_sqrt.value()) / d;
    const double r_b =
        sigma * (t * s_inv.value() - s_sqrt.value() * *stats.int_inv_r) / d;
    return ResidualPair{r_a, r_b};
}

}  // namespace cir
