#include <doctest.h>

#include <cmath>
#include <numbers>

#include "evoland/stats.hpp"
#include "oracles.hpp"

using namespace evoland;
using namespace evoland::stats;

namespace {

WalkTrace trace_of(std::vector<double> values) {
    WalkTrace t;
    t.observations = std::move(values);
    return t;
}

}  // namespace

TEST_CASE("autocorrelation: worked examples") {
    const std::vector<double> alternating{0, 1, 0, 1, 0, 1, 0, 1};
    const auto r = autocorrelation(alternating, 1);
    CHECK(r[0] == 1.0);
    // numerator 7 * (-0.25), denominator 8 * 0.25
    CHECK(r[1] == doctest::Approx(-0.875).epsilon(1e-15));
    CHECK(std::abs(r[1] - oracle::naive_autocorrelation(alternating, 1)) < 1e-12);

    const std::vector<double> ramp{1, 2, 3, 4, 5};
    CHECK(autocorrelation(ramp, 0).at(0) == 1.0);
}

TEST_CASE("autocorrelation: error paths") {
    CHECK_THROWS_AS(autocorrelation(std::vector<double>{5, 5, 5}, 1), DegenerateSeriesError);
    CHECK_THROWS_AS(autocorrelation(std::vector<double>{1}, 0), std::invalid_argument);
    CHECK_THROWS_AS(autocorrelation(std::vector<double>{1, 2, 3}, 3), std::invalid_argument);
}

TEST_CASE("autocorrelation matches the naive estimator on random series") {
    Rng rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng.below(199);
        std::vector<double> y(n);
        for (double& v : y) {
            v = std::floor(rng.unit() * 10.0) + rng.unit();
        }
        const std::size_t max_lag = std::min<std::size_t>(20, n - 1);
        const auto r = autocorrelation(y, max_lag);
        CHECK(r[0] == 1.0);
        for (std::size_t k = 0; k <= max_lag; ++k) {
            CHECK(std::abs(r[k] - oracle::naive_autocorrelation(y, k)) < 1e-12);
            CHECK(std::abs(r[k]) <= 1.0 + 1e-9);
        }
    }
}

TEST_CASE("correlation length") {
    CHECK(correlation_length(1.0 / std::numbers::e) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(correlation_length(0.5) == doctest::Approx(1.4426950408889634).epsilon(1e-14));
    CHECK_THROWS_AS(correlation_length(-0.2), UndefinedCorrelationLengthError);
    CHECK_THROWS_AS(correlation_length(0.0), UndefinedCorrelationLengthError);
    CHECK_THROWS_AS(correlation_length(1.0), UndefinedCorrelationLengthError);
    CHECK_THROWS_AS(correlation_length(std::nan("")), UndefinedCorrelationLengthError);

    double previous = 0.0;
    for (int i = 1; i < 1000; ++i) {
        const double tau = correlation_length(i / 1000.0);
        CHECK(tau > previous);
        previous = tau;
    }
}

TEST_CASE("average autocorrelation: one trace equals its own estimate") {
    const std::vector<double> y{3, 1, 4, 1, 5, 9, 2, 6, 5, 3};
    const std::vector<WalkTrace> traces{trace_of(y)};
    const auto report = average_autocorrelation(traces, 4, 5);
    const auto direct = autocorrelation(y, 4);
    CHECK(report.rho == direct);
    CHECK(report.num_series_used == 1);
    CHECK(report.num_series_discarded == 0);
    CHECK(report.total_observations == 10);
}

TEST_CASE("average autocorrelation: two traces with r(1) = 0.4 and 0.6") {
    // Exact rationals, found by enumeration over small integer series.
    const std::vector<WalkTrace> traces{trace_of({0, 0, 0, 0, 3, 2, 2}),
                                        trace_of({0, 0, 0, 0, 2, 3, 2})};
    CHECK(autocorrelation(traces[0].observations, 1)[1] == doctest::Approx(0.4).epsilon(1e-14));
    CHECK(autocorrelation(traces[1].observations, 1)[1] == doctest::Approx(0.6).epsilon(1e-14));
    const auto report = average_autocorrelation(traces, 1, 2);
    CHECK(report.rho[1] == doctest::Approx(0.5).epsilon(1e-14));
    REQUIRE(report.tau.has_value());
    CHECK(*report.tau == doctest::Approx(1.0 / std::log(2.0)).epsilon(1e-12));
    REQUIRE(report.tau_per_series_mean.has_value());
    CHECK(*report.tau_per_series_mean ==
          doctest::Approx((correlation_length(0.4) + correlation_length(0.6)) / 2.0));
}

TEST_CASE("average autocorrelation: discard accounting") {
    const std::vector<WalkTrace> constant{trace_of(std::vector<double>(30, 2.0)),
                                          trace_of(std::vector<double>(30, 5.0)),
                                          trace_of(std::vector<double>(30, 1.0))};
    try {
        (void)average_autocorrelation(constant, 5, 20);
        FAIL("expected NoUsableSeriesError");
    } catch (const NoUsableSeriesError& e) {
        CHECK(e.discarded() == 3);
        CHECK(e.degenerate() == 3);
    }

    std::vector<double> wiggle(30);
    for (std::size_t i = 0; i < wiggle.size(); ++i) {
        wiggle[i] = static_cast<double>((i * 7) % 5);
    }
    const std::vector<WalkTrace> mixed{trace_of(wiggle), trace_of({1.0}),
                                       trace_of(std::vector<double>(30, 2.0)),
                                       trace_of({1, 2, 3, 4, 5})};
    const auto report = average_autocorrelation(mixed, 5, 20);
    CHECK(report.num_series_used == 1);
    CHECK(report.num_series_discarded == 3);
    CHECK(report.num_series_degenerate == 1);
}

TEST_CASE("tau is absent when the averaged rho(1) is not in (0, 1)") {
    const std::vector<WalkTrace> traces{trace_of({0, 1, 0, 1, 0, 1, 0, 1})};
    const auto report = average_autocorrelation(traces, 2, 2);
    CHECK(report.rho[1] < 0.0);
    CHECK_FALSE(report.tau.has_value());
}

TEST_CASE("neutral degree statistics") {
    Rng rng(4);
    const auto flat = neutral_degree_stats(ConstantLandscape(8), 500, rng);
    CHECK(flat.mean == 8.0);
    CHECK(flat.variance == 0.0);
    CHECK(flat.histogram.size() == 9);
    CHECK(flat.histogram[8] == 500);

    const auto rugged = neutral_degree_stats(PopcountLandscape(8), 500, rng);
    CHECK(rugged.mean == 0.0);
    CHECK(rugged.histogram[0] == 500);

    // Bits 4..7 never affect fitness: neutral degree is 4 everywhere.
    const FunctionLandscape half(8, [](const BitString& s) {
        double v = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            v += s[i] ? 1.0 : 0.0;
        }
        return v;
    });
    const auto h = neutral_degree_stats(half, 100, rng);
    CHECK(h.mean == 4.0);
    CHECK(h.variance == 0.0);

    CHECK_THROWS_AS(neutral_degree_stats(half, 0, rng), std::invalid_argument);
}
