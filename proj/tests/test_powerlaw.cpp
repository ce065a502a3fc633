#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "emodes/powerlaw.hpp"
#include "oracles.hpp"

using namespace emodes;
namespace pl = emodes::powerlaw;

TEST_CASE("curve: sample values on the occupancy curve") {
    const auto samples = pl::curve(0.01, 10.0, 4);
    CHECK(samples.size() == 4);
    CHECK(samples.front().ln_phi == doctest::Approx(std::log(0.01)).epsilon(1e-14));
    CHECK(samples.back().ln_phi == doctest::Approx(std::log(10.0)).epsilon(1e-12));
    // ln n(0.01) = ln 99.50083...
    CHECK(samples.front().ln_n == doctest::Approx(4.6001660193248969).epsilon(1e-13));
    // exponential truncation: ln n(10) = -10 + e^-10 + ...
    CHECK(samples.back().ln_n == doctest::Approx(-9.9999545990396295).epsilon(1e-12));

    // n(ln 2) = 1, so ln n crosses zero there
    const auto unity = pl::curve(std::numbers::ln2, 1.0, 2);
    CHECK(std::abs(unity.front().ln_n) < 1e-14);
}

TEST_CASE("curve: spacing modes and validation") {
    const auto linear = pl::curve(1.0, 3.0, 3, pl::Spacing::linear);
    CHECK(std::exp(linear[0].ln_phi) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::exp(linear[1].ln_phi) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(std::exp(linear[2].ln_phi) == doctest::Approx(3.0).epsilon(1e-14));

    const auto logspaced = pl::curve(1e-4, 1.0, 5);
    for (std::size_t i = 1; i < logspaced.size(); ++i)
        CHECK(logspaced[i].ln_phi - logspaced[i - 1].ln_phi ==
              doctest::Approx(std::log(10.0)).epsilon(1e-12));

    CHECK_THROWS_AS(pl::curve(0.0, 1.0, 10), std::domain_error);
    CHECK_THROWS_AS(pl::curve(2.0, 1.0, 10), std::domain_error);
    CHECK_THROWS_AS(pl::curve(1.0, 2.0, 1), std::domain_error);
}

TEST_CASE("local_slope: analytic values, frozen against independent evaluation") {
    CHECK(pl::local_slope(PhiRatio(0.01)) ==
          doctest::Approx(-1.0050083333194445).epsilon(1e-13));
    CHECK(std::abs(pl::local_slope(PhiRatio(0.01)) - (-1.0)) < 0.01);
    CHECK(pl::local_slope(PhiRatio(10.0)) ==
          doctest::Approx(-10.000454019910097).epsilon(1e-13));
    CHECK(pl::local_slope(PhiRatio(0.5)) ==
          doctest::Approx(-1.2707470412683991).epsilon(1e-13));
    // power-law limit
    CHECK(pl::local_slope(PhiRatio(1e-8)) == doctest::Approx(-1.0).epsilon(1e-7));
}

TEST_CASE("local_slope agrees with central finite differences") {
    for (double phi : {0.001, 0.01, 0.1, 1.0, 5.0, 10.0})
        CHECK(pl::local_slope(PhiRatio(phi)) ==
              doctest::Approx(oracles::numeric_loglog_slope(phi)).epsilon(1e-6));
}

TEST_CASE("local_slope: |slope + 1| <= phi on (0, 1], strictly decreasing") {
    double previous = 0.0;
    for (double phi = 0.01; phi <= 1.0; phi += 0.01) {
        const double s = pl::local_slope(PhiRatio(phi));
        CHECK(std::abs(s + 1.0) <= phi);
        CHECK(s < previous);
        previous = s;
    }
    // keeps decreasing into the truncation regime
    CHECK(pl::local_slope(PhiRatio(20.0)) < pl::local_slope(PhiRatio(10.0)));
}

TEST_CASE("field_transform: halves the abscissa, keeps the ordinate") {
    const std::vector<pl::LogLogSample> samples = {
        {std::log(std::numbers::ln2), 0.0}, {1.0, -2.0}, {-3.0, 4.0}};
    const auto transformed = pl::field_transform(samples);
    REQUIRE(transformed.size() == 3);
    CHECK(transformed[0].ln_phi == doctest::Approx(-0.18325646029083218).epsilon(1e-13));
    CHECK(transformed[0].ln_n == 0.0);
    CHECK(transformed[1].ln_phi == 0.5);
    CHECK(transformed[1].ln_n == -2.0);
}

TEST_CASE("field_transform doubles fitted slopes exactly") {
    for (double slope : {-1.0, -0.37, 2.5}) {
        std::vector<pl::LogLogSample> line;
        for (int i = 0; i < 40; ++i) {
            const double x = -9.0 + 0.3 * i;
            line.push_back({x, slope * x + 0.7});
        }
        const double lo = std::exp(line.front().ln_phi);
        const double hi = std::exp(line.back().ln_phi);
        const auto plain = pl::fit_slope(line, lo, hi);
        const auto doubled = pl::fit_slope(pl::field_transform(line), std::sqrt(lo), std::sqrt(hi));
        CHECK(plain.slope == doctest::Approx(slope).epsilon(1e-12));
        CHECK(doubled.slope == doctest::Approx(2.0 * slope).epsilon(1e-12));
    }
}

TEST_CASE("fit_slope: exact line recovers slope with zero residual") {
    std::vector<pl::LogLogSample> line;
    for (int i = 0; i < 10; ++i) line.push_back({0.1 * i, -0.1 * i + 3.0});
    const auto fit = pl::fit_slope(line, std::exp(0.0), std::exp(0.9));
    CHECK(fit.slope == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(fit.residual < 1e-12);
}

TEST_CASE("fit_slope: classical window reads the -1 power law") {
    const auto samples = pl::curve(1e-4, 1e-2, 50);
    const auto fit = pl::fit_slope(samples, 1e-4, 1e-2);
    CHECK(fit.slope <= -1.00);
    CHECK(fit.slope >= -1.01);
    CHECK(fit.residual < 1e-3);

    // the field picture doubles it to -2
    const auto field = pl::fit_slope(pl::field_transform(samples), std::sqrt(1e-4),
                                     std::sqrt(1e-2));
    CHECK(field.slope <= -2.00);
    CHECK(field.slope >= -2.02);
}

TEST_CASE("fit_slope: quantum window exposes the exponential truncation") {
    const auto samples = pl::curve(10.0, 20.0, 60);
    const auto fit = pl::fit_slope(samples, 10.0, 20.0);
    CHECK(fit.slope <= -10.0);
    CHECK(fit.residual > 0.05);  // not a power law; curvature dominates
}

TEST_CASE("fit_slope converges to the local slope as the window shrinks") {
    const double center = 0.01;
    const double local = pl::local_slope(PhiRatio(center));
    const auto samples = pl::curve(1e-3, 1e-1, 400);

    double previous_error = std::numeric_limits<double>::infinity();
    for (double half_decades : {0.5, 0.25, 0.125}) {
        const double factor = std::pow(10.0, half_decades);
        const auto fit = pl::fit_slope(samples, center / factor, center * factor);
        const double error = std::abs(fit.slope - local);
        CHECK(error < previous_error);
        previous_error = error;
    }
    CHECK(previous_error < 1e-3);
}

TEST_CASE("fit_slope: window validation") {
    const auto samples = pl::curve(1e-3, 1e-1, 10);
    CHECK_THROWS_AS(pl::fit_slope(samples, 1.0, 2.0), std::domain_error);   // empty window
    CHECK_THROWS_AS(pl::fit_slope(samples, 2.0, 1.0), std::domain_error);   // inverted
    CHECK_THROWS_AS(pl::fit_slope(samples, -1.0, 1.0), std::domain_error);  // non-positive
}
