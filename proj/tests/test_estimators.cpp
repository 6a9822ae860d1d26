#include <cmath>
#include <vector>

#include <doctest.h>

#include "cir/estimators.hpp"
#include "cir/model.hpp"
#include "cir/rng.hpp"
#include "cir/simulate.hpp"
#include "cir/statistics.hpp"

using namespace cir;

namespace {

const ModelParams kUnit = validate_params(1, 1, 1, 1);

Path hand_path() {
    Path path;
    path.times = {0.0, 0.5, 1.0};
    path.values = {1.0, 2.0, 1.0};
    return path;
}

Path constant_path(double level, int steps) {
    Path path;
    for (int i = 0; i <= steps; ++i) {
        path.times.push_back(0.01 * i);
        path.values.push_back(level);
    }
    return path;
}

// Zero-noise full-truncation path: the recurrence runs on the drift alone.
Path zero_noise_path(const ModelParams& params, double horizon, double dt) {
    Path path;
    path.params_used = params;
    path.scheme_used = Scheme::euler_full_truncation;
    const auto n = static_cast<std::size_t>(std::llround(horizon / dt));
    path.times.resize(n + 1);
    path.values.resize(n + 1);
    path.noise.assign(n, 0.0);
    path.values[0] = params.r0;
    for (std::size_t i = 0; i < n; ++i) {
        path.times[i + 1] = static_cast<double>(i + 1) * dt;
        path.values[i + 1] =
            euler_full_truncation_step(path.values[i], params, dt, 0.0);
    }
    return path;
}

double rel_err(double x, double y) {
    return std::abs(x - y) / std::max({std::abs(x), std::abs(y), 1e-30});
}

}  // namespace

TEST_CASE("likelihood estimator on the hand path") {
    const PathStatistics s = path_statistics(hand_path());
    const DriftEstimate est = mle_estimate(s);
    // D = 1.5 * 0.75 - 1 = 0.125; a = (1.5*0.5 - 0)/D = 6; b = (0 + 0.5)/D = 4.
    CHECK(est.denominator == doctest::Approx(0.125));
    CHECK(est.a_est == doctest::Approx(6.0));
    CHECK(est.b_est == doctest::Approx(4.0));
    CHECK(est.kind == EstimatorKind::mle);
}

TEST_CASE("alternative estimator on the hand path, with its internal identity") {
    const PathStatistics s = path_statistics(hand_path());
    const DriftEstimate est = alt_estimate(s, 1.0);
    // D = 1*2.5 - 2.25 = 0.25; a = 0.5*2.25/D = 4.5; b = 0.5*1.5/D = 3.
    CHECK(est.denominator == doctest::Approx(0.25));
    CHECK(est.a_est == doctest::Approx(4.5));
    CHECK(est.b_est == doctest::Approx(3.0));
    CHECK(est.kind == EstimatorKind::alternative);
    CHECK(rel_err(est.a_est, est.b_est * s.int_r / s.horizon) < 1e-12);
}

TEST_CASE("constant paths degenerate both estimators") {
    const PathStatistics s = path_statistics(constant_path(1.0, 50));
    try {
        mle_estimate(s);
        FAIL("expected degenerate denominator");
    } catch (const CirError& e) {
        CHECK(e.kind() == ErrorKind::degenerate_denominator);
    }
    try {
        alt_estimate(s, 1.0);
        FAIL("expected degenerate denominator");
    } catch (const CirError& e) {
        CHECK(e.kind() == ErrorKind::degenerate_denominator);
    }
}

TEST_CASE("likelihood estimator requires the inverse statistics") {
    Path path;
    path.times = {0.0, 0.5, 1.0};
    path.values = {1.0, 0.0, 1.0};
    const PathStatistics s = path_statistics(path);
    try {
        mle_estimate(s);
        FAIL("expected unreliable-inverse rejection");
    } catch (const CirError& e) {
        CHECK(e.kind() == ErrorKind::unreliable_inverse);
    }
}

TEST_CASE("parametrization conversion alpha = b, mu = a/b") {
    const DriftEstimate est{2.0, 1.0, EstimatorKind::mle, 1.0};
    const AlphaMuEstimate am = to_alpha_mu(est);
    CHECK(am.alpha_est == doctest::Approx(1.0));
    CHECK(am.mu_est == doctest::Approx(2.0));

    const DriftEstimate unit{1.0, 1.0, EstimatorKind::mle, 1.0};
    CHECK(to_alpha_mu(unit).alpha_est == doctest::Approx(1.0));
    CHECK(to_alpha_mu(unit).mu_est == doctest::Approx(1.0));

    const DriftEstimate zero{1.0, 0.0, EstimatorKind::mle, 1.0};
    try {
        to_alpha_mu(zero);
        FAIL("expected zero-mean-reversion rejection");
    } catch (const CirError& e) {
        CHECK(e.kind() == ErrorKind::zero_mean_reversion);
    }
}

TEST_CASE("zero-noise path: residuals vanish and the MLE recovers (a, b) exactly") {
    const auto params = validate_params(1.5, 0.8, 0.6, 2.0);
    const Path path = zero_noise_path(params, 5.0, 0.01);
    const ResidualPair r = residual_decomposition(path, params);
    CHECK(r.r_a == 0.0);
    CHECK(r.r_b == 0.0);
    const DriftEstimate est = mle_estimate(path_statistics(path));
    CHECK(rel_err(est.a_est, params.a) < 1e-10);
    CHECK(rel_err(est.b_est, params.b) < 1e-10);
}

TEST_CASE("residual decomposition reproduces the estimation error exactly") {
    SimConfig cfg;
    cfg.horizon = 50.0;
    cfg.dt = 0.01;
    cfg.store_noise = true;
    int used = 0;
    for (std::uint64_t k = 0; used < 10 && k < 100; ++k) {
        const Path path = simulate_path(kUnit, cfg, derive_replication_seed(55, k));
        const PathStatistics s = path_statistics(path);
        if (!s.inv_reliable) {
            continue;  // floored path, outside the identity's precondition
        }
        ++used;
        const DriftEstimate est = mle_estimate(s);
        const ResidualPair r = residual_decomposition(path, kUnit);
        CHECK(rel_err(est.a_est - kUnit.a, r.r_a) < 1e-8);
        CHECK(rel_err(est.b_est - kUnit.b, r.r_b) < 1e-8);
    }
    CHECK(used == 10);
}

TEST_CASE("residuals at T=200 stay small on surviving paths") {
    SimConfig cfg;
    cfg.horizon = 200.0;
    cfg.dt = 0.01;
    cfg.store_noise = true;
    int used = 0;
    for (std::uint64_t k = 0; used < 5 && k < 100; ++k) {
        const Path path = simulate_path(kUnit, cfg, derive_replication_seed(909, k));
        if (!path_statistics(path).inv_reliable) {
            continue;
        }
        ++used;
        const ResidualPair r = residual_decomposition(path, kUnit);
        CHECK(std::abs(r.r_a) < 0.5);
        CHECK(std::abs(r.r_b) < 0.5);
    }
    CHECK(used == 5);
}

TEST_CASE("residual decomposition demands stored noise") {
    SimConfig cfg;
    cfg.horizon = 1.0;
    cfg.dt = 0.01;
    const Path path = simulate_path(kUnit, cfg, 5);
    try {
        residual_decomposition(path, kUnit);
        FAIL("expected missing-noise rejection");
    } catch (const CirError& e) {
        CHECK(e.kind() == ErrorKind::missing_noise);
    }
}

TEST_CASE("scaling equivariance: c-scaled path with sqrt(c)-scaled sigma, exact") {
    // c = 4 is a power of two, so every floating-point operation commutes
    // with the scaling and the mapped estimates match bit for bit.
    const double c = 4.0;
    SimConfig cfg;
    cfg.horizon = 10.0;
    cfg.dt = 0.01;
    const Path path = simulate_path(kUnit, cfg, 777);
    Path scaled = path;
    for (double& v : scaled.values) {
        v *= c;
    }
    const PathStatistics s = path_statistics(path);
    const PathStatistics sc = path_statistics(scaled);

    const DriftEstimate alt = alt_estimate(s, 1.0);
    const DriftEstimate alt_scaled = alt_estimate(sc, 2.0);  // sqrt(4) * 1
    CHECK(alt_scaled.a_est == c * alt.a_est);
    CHECK(alt_scaled.b_est == alt.b_est);

    const DriftEstimate mle = mle_estimate(s);
    const DriftEstimate mle_scaled = mle_estimate(sc);
    CHECK(mle_scaled.a_est == c * mle.a_est);
    CHECK(mle_scaled.b_est == mle.b_est);
}

TEST_CASE("estimates tighten as the horizon grows") {
    SimConfig cfg;
    cfg.horizon = 200.0;
    cfg.dt = 0.01;
    const std::vector<double> cks{10.0, 200.0};
    const int reps = 40;
    double short_err = 0.0, long_err = 0.0;
    for (int i = 0; i < reps; ++i) {
        const Path path = simulate_path(kUnit, cfg, derive_replication_seed(8, i));
        const auto stats = checkpoint_statistics(path, cks);
        const auto at_short = alt_estimate(stats[0], kUnit.sigma);
        const auto at_long = alt_estimate(stats[1], kUnit.sigma);
        short_err += std::abs(at_short.a_est - kUnit.a);
        long_err += std::abs(at_long.a_est - kUnit.a);
    }
    CHECK(long_err < short_err);
}
