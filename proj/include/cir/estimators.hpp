#pragma once

#include "cir/model.hpp"
#include "cir/simulate.hpp"
#include "cir/statistics.hpp"

namespace cir {

enum class EstimatorKind { mle, alternative };

std::string_view to_string(EstimatorKind kind) noexcept;

struct DriftEstimate {
    double a_est;
    double b_est;
    EstimatorKind kind;
    // The estimator's denominator, kept for conditioning diagnostics. By
    // Cauchy-Schwarz it is strictly positive on any non-constant grid path.
    double denominator;
};

// Mean-reversion parametrization dr = alpha (mu - r) dt + sigma sqrt(r) dW,
// related to (a, b) by alpha = b, mu = a/b.
struct AlphaMuEstimate {
    double alpha_est;
    double mu_est;
};

// Likelihood-based estimator from continuous-observation statistics:
//
//   a^ = (int_r * int_dr/r - T (r_T - r_0)) / D
//   b^ = ((r_0 - r_T) * int_dt/r + T int_dr/r) / D,   D = int_r * int_dt/r - T^2.
//
// Needs the inverse statistics, hence a path bounded away from zero. The
// estimate is computed whenever its statistics exist, even outside the
// Feller regime; flagging such estimates is the caller's concern.
DriftEstimate mle_estimate(const PathStatistics& stats);

// Moment-based estimator using only int r dt and int r^2 dt (sigma known):
//
//   a~ = (sigma^2/2) * int_r^2 / D
//   b~ = (sigma^2/2) * T int_r / D,   D = T int_r2 - int_r^2.
//
// Defined for every positive parameter set, Feller or not, and satisfies
// a~ = b~ * int_r / T identically.
DriftEstimate alt_estimate(const PathStatistics& stats, double sigma);

AlphaMuEstimate to_alpha_mu(const DriftEstimate& est);

// Estimation-error remainders of the likelihood estimator. On any
// full-truncation path with stored noise and positive minimum,
//
//   a^ - a = R_a   and   b^ - b = R_b
//
// hold exactly at the discrete level (up to floating-point roundoff), with
//
//   R_a = sigma (S_inv int_r - T S_sqrt) / D
//   R_b = sigma (T S_inv - S_sqrt * int_dt/r) / D
//
// where S_inv = sum dW_i / sqrt(r_i) and S_sqrt = sum sqrt(r_i) dW_i.
struct ResidualPair {
    double r_a;
    double r_b;
};

ResidualPair residual_decomposition(const Path& path, const ModelParams& true_params,
                                    double inv_floor = kDefaultInvFloor);

}  // namespace cir
