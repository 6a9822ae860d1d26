#include <cmath>

#include <doctest.h>

#include "cir/model.hpp"
#include "cir/quadrature.hpp"

using namespace cir;

TEST_CASE("validate_params accepts positive parameters and sets the Feller flag") {
    const auto feller = validate_params(1, 1, 1, 1);
    CHECK(feller.feller());
    CHECK(feller.mle_defined());

    // 2a = 2 < 4 = sigma^2
    const auto non_feller = validate_params(1, 1, 2, 1);
    CHECK_FALSE(non_feller.feller());
    CHECK_FALSE(non_feller.mle_defined());
}

TEST_CASE("validate_params rejects non-positive entries by name") {
    for (const auto& [a, b, sigma, r0, name] :
         {std::tuple{0.0, 1.0, 1.0, 1.0, "a"},
          {1.0, -2.0, 1.0, 1.0, "b"},
          {1.0, 1.0, 0.0, 1.0, "sigma"},
          {1.0, 1.0, 1.0, 0.0, "r0"}}) {
        try {
            validate_params(a, b, sigma, r0);
            FAIL("expected rejection for ", name);
        } catch (const CirError& e) {
            CHECK(e.kind() == ErrorKind::non_positive_parameter);
            CHECK(std::string(e.what()).find(name) != std::string::npos);
        }
    }
    CHECK_THROWS_AS(validate_params(std::nan(""), 1, 1, 1), CirError);
}

TEST_CASE("stationary law maps (a, b, sigma) to gamma shape and rate") {
    const auto law = stationary_law(validate_params(1, 1, 1, 1));
    CHECK(law.alpha == doctest::Approx(2.0));
    CHECK(law.beta == doctest::Approx(2.0));

    const auto law2 = stationary_law(validate_params(1, 2, 3, 1));
    CHECK(law2.alpha == doctest::Approx(2.0 / 9.0));
    CHECK(law2.beta == doctest::Approx(4.0 / 9.0));
}

TEST_CASE("stationary density: hand value and support") {
    const auto law = stationary_law(validate_params(1, 1, 1, 1));
    // beta^alpha x^(alpha-1) e^(-beta x) / Gamma(alpha) at x = 1, alpha = beta = 2:
    // 4 e^-2, evaluated independently.
    CHECK(stationary_density(1.0, law) == doctest::Approx(0.5413411329464508).epsilon(1e-12));
    CHECK(stationary_density(-1.0, law) == 0.0);
    CHECK(stationary_density(0.0, law) == 0.0);
    for (double x = 0.1; x < 30.0; x += 0.7) {
        CHECK(stationary_density(x, law) >= 0.0);
    }
}

TEST_CASE("stationary density integrates to one") {
    // Includes shape < 1 laws (singular at zero) and a large-shape law.
    for (const auto& [a, b, sigma] :
         {std::tuple{1.0, 1.0, 1.0}, {1.0, 1.0, 2.0}, {1.0, 2.0, 3.0},
          {3.0, 1.0, 0.5}, {2.0, 0.5, 0.2}}) {
        const auto law = stationary_law(validate_params(a, b, sigma, 1));
        const double hi = density_quadrature_bounds(law).hi;
        CHECK(stationary_mass(law, hi) == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("stationary moments match the closed forms") {
    CHECK(stationary_moment(MomentKind::mean, validate_params(2, 1, 1, 1)) ==
          doctest::Approx(2.0));
    CHECK(stationary_moment(MomentKind::second, validate_params(1, 1, 1, 1)) ==
          doctest::Approx(1.5));
    CHECK(stationary_moment(MomentKind::inverse_mean, validate_params(1, 1, 1, 1)) ==
          doctest::Approx(2.0));

    try {
        stationary_moment(MomentKind::inverse_mean, validate_params(1, 1, 2, 1));
        FAIL("expected Feller violation");
    } catch (const CirError& e) {
        CHECK(e.kind() == ErrorKind::feller_violation);
    }
    // Boundary 2a = sigma^2 is rejected as well.
    CHECK_THROWS_AS(
        stationary_moment(MomentKind::inverse_mean, validate_params(0.5, 1, 1, 1)),
        CirError);
}

TEST_CASE("stationary moments agree with quadrature against the density") {
    for (const auto& [a, b, sigma] :
         {std::tuple{1.0, 1.0, 1.0}, {2.0, 1.0, 1.0}, {1.0, 3.0, 1.0}}) {
        const auto params = validate_params(a, b, sigma, 1);
        const auto law = stationary_law(params);
        const auto bounds = density_quadrature_bounds(law);
        // All three laws have shape >= 2, so x^power * density is bounded;
        // starting the inverse moment just above zero avoids a 0 * inf at the
        // endpoint and discards only ~1e-9 of mass.
        const auto moment = [&](int power) {
            return integrate(
                [&](double x) {
                    return std::pow(x, power) * stationary_density(x, law);
                },
                power < 0 ? 1e-9 : bounds.lo, bounds.hi, 1e-12);
        };
        CHECK(moment(1) ==
              doctest::Approx(stationary_moment(MomentKind::mean, params)).epsilon(1e-6));
        CHECK(moment(2) ==
              doctest::Approx(stationary_moment(MomentKind::second, params)).epsilon(1e-6));
        if (params.feller()) {
            CHECK(moment(-1) ==
                  doctest::Approx(stationary_moment(MomentKind::inverse_mean, params))
                      .epsilon(1e-6));
        }
    }
}

TEST_CASE("transient mean: endpoints, stationarity, monotone relaxation") {
    const auto params = validate_params(1, 1, 1, 1);
    CHECK(transient_mean(0.0, params) == doctest::Approx(1.0));
    // r0 = a/b: stationary start stays put.
    const auto stat = validate_params(2, 1, 1, 2);
    for (double t : {0.0, 0.5, 3.0, 100.0}) {
        CHECK(transient_mean(t, stat) == doctest::Approx(2.0));
    }
    // Decaying exponential: limit is a/b.
    const auto far = validate_params(1, 1, 1, 5);
    CHECK(transient_mean(40.0, far) == doctest::Approx(1.0).epsilon(1e-12));

    // Monotone: increasing when r0 < a/b, decreasing when r0 > a/b.
    const auto low = validate_params(2, 1, 1, 1);
    double prev = transient_mean(0.0, low);
    for (double t = 0.25; t < 6.0; t += 0.25) {
        const double m = transient_mean(t, low);
        CHECK(m > prev);
        prev = m;
    }
    prev = transient_mean(0.0, far);
    for (double t = 0.25; t < 6.0; t += 0.25) {
        const double m = transient_mean(t, far);
        CHECK(m < prev);
        prev = m;
    }

    try {
        transient_mean(-0.1, params);
        FAIL("expected rejection of negative time");
    } catch (const CirError& e) {
        CHECK(e.kind() == ErrorKind::negative_time);
    }
}

TEST_CASE("log-gamma route stays accurate for large shapes") {
    // alpha = 2a/sigma^2 = 200 would overflow Gamma(alpha) if the density
    // were not evaluated in log space.
    const auto law = stationary_law(validate_params(1, 1, 0.1, 1));
    CHECK(law.alpha == doctest::Approx(200.0));
    const double at_mode = stationary_density(law.alpha / law.beta, law);
    CHECK(std::isfinite(at_mode));
    CHECK(at_mode > 0.0);
    const double hi = density_quadrature_bounds(law).hi;
    CHECK(stationary_mass(law, hi) == doctest::Approx(1.0).epsilon(1e-8));
}
