#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "oupairs/cycle_stats.hpp"
#include "oupairs/errors.hpp"
#include "oupairs/simulator.hpp"
#include "oupairs/specfun.hpp"

using namespace oupairs;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("degenerate and invalid strategies", "[cycle_stats]") {
    CHECK(expected_cycle_time({0.3, 0.3}) == 0.0);
    CHECK(cycle_time_variance({0.3, 0.3}) == 0.0);
    CHECK(expected_cycle_time({-4.0, -4.0}) == 0.0);
    CHECK_THROWS_AS(expected_cycle_time({0.0, 0.1}), DomainError);
    CHECK_THROWS_AS(cycle_time_variance({0.0, 0.1}), DomainError);
    CHECK_THROWS_AS(cycle_stats({std::nan(""), 0.0}), DomainError);
}

TEST_CASE("series agree with quadrature of the first-passage equations", "[cycle_stats]") {
    const Strategy cases[] = {{0.5, -0.5}, {1.0, -1.0}, {0.2, -0.1}, {1.5, 0.3},
                              {-0.4, -1.6}, {2.0, -2.0}, {0.05, -0.05}};
    for (const Strategy& s : cases) {
        CAPTURE(s.a, s.b);
        const CycleStats st = cycle_stats(s);
        const CycleStats q = oracle::cycle_by_quadrature(s);
        CHECK_THAT(st.mean_t, WithinRel(q.mean_t, 1e-8));
        CHECK_THAT(st.var_t, WithinRel(q.var_t, 1e-7));
    }
}

TEST_CASE("mean series agrees with the direct Gamma/factorial evaluation", "[cycle_stats]") {
    for (double a = -2.5; a <= 3.0; a += 0.5) {
        for (double b = -3.0; b < a; b += 0.7) {
            CAPTURE(a, b);
            CHECK_THAT(expected_cycle_time({a, b}),
                       WithinRel(oracle::expected_cycle_time_direct({a, b}), 1e-12));
        }
    }
}

TEST_CASE("plain digamma weight overstates the variance by gamma * E[T]", "[cycle_stats]") {
    // w2 evaluated with psi(k - 1/2) alone, explicit Gamma and factorials.
    auto w2_plain = [](double xi) {
        const long double x = std::numbers::sqrt2_v<long double> * xi;
        long double sum = 0.0L;
        long double fact = 1.0L;
        for (int k = 1; k <= 120; ++k) {
            const int p = 2 * k - 1;
            if (k > 1) fact *= static_cast<long double>(p - 1) * p;
            sum += oracle::gamma_half_integer(k - 1) * specfun::digamma_half_integer(k - 1) *
                   std::pow(x, p) / fact;
        }
        return static_cast<double>(sum);
    };
    for (const Strategy& s : {Strategy{0.5, -0.5}, Strategy{1.2, 0.1}, Strategy{-0.3, -1.4}}) {
        const EndpointSeries ea = endpoint_series(s.a);
        const EndpointSeries eb = endpoint_series(s.b);
        const double plain = ea.odd * ea.even - eb.odd * eb.even - w2_plain(s.a) + w2_plain(s.b);
        const CycleStats st = cycle_stats(s);
        CHECK_THAT(plain - st.var_t,
                   WithinRel(specfun::euler_gamma * st.mean_t, 1e-10));
    }
    // the reference pair: printed form 5.597..., first-passage value 4.0876...
    const CycleStats ref = cycle_stats({0.5, -0.5});
    CHECK_THAT(ref.mean_t, WithinAbs(2.6151, 5e-5));
    CHECK_THAT(ref.var_t, WithinAbs(4.0876, 5e-5));
}

TEST_CASE("reflection symmetry", "[cycle_stats]") {
    for (double a = -2.8; a <= 3.0; a += 0.45) {
        for (double b = -3.0; b < a; b += 0.55) {
            const CycleStats s = cycle_stats({a, b});
            const CycleStats r = cycle_stats({-b, -a});
            CHECK_THAT(r.mean_t, WithinRel(s.mean_t, 1e-12));
            CHECK_THAT(r.var_t, WithinRel(s.var_t, 1e-10));
        }
    }
}

TEST_CASE("positivity and monotonicity of E[T]", "[cycle_stats]") {
    const double h = 0.05;
    for (double a = -3.0; a <= 3.0; a += 0.25) {
        for (double b = -3.0; b < a - 1e-9; b += 0.25) {
            CAPTURE(a, b);
            const CycleStats s = cycle_stats({a, b});
            CHECK(s.mean_t > 0.0);
            CHECK(s.var_t >= 0.0);
            CHECK(expected_cycle_time({a + h, b}) > s.mean_t);
            CHECK(expected_cycle_time({a, b - h}) > s.mean_t);
        }
    }
}

TEST_CASE("truncation is stable", "[cycle_stats]") {
    for (double a = -5.0; a <= 5.0; a += 1.25) {
        for (double b = -5.0; b < a; b += 1.25) {
            const CycleStats s = cycle_stats({a, b});
            const CycleStats d = cycle_stats({a, b}, 2 * kSeriesMaxTerms);
            CHECK_THAT(d.mean_t, WithinRel(s.mean_t, 1e-12));
            CHECK_THAT(d.var_t, WithinRel(s.var_t, 1e-12));
        }
    }
    CHECK_THROWS_AS(endpoint_series(5.0, 10), ConvergenceError);
}

TEST_CASE("endpoint series parity", "[cycle_stats]") {
    for (double xi : {0.1, 0.7, 1.9, 3.3}) {
        const EndpointSeries p = endpoint_series(xi);
        const EndpointSeries n = endpoint_series(-xi);
        CHECK(n.odd == -p.odd);
        CHECK(n.even == p.even);
        CHECK(n.w2 == -p.w2);
    }
    const EndpointSeries z = endpoint_series(0.0);
    CHECK(z.odd == 0.0);
    CHECK(z.even == 0.0);
}

TEST_CASE("joint evaluation matches the individual operations", "[cycle_stats]") {
    const CycleStats s = cycle_stats({0.5, -0.5});
    CHECK(s.mean_t == expected_cycle_time({0.5, -0.5}));
    CHECK(s.var_t == cycle_time_variance({0.5, -0.5}));
    const CycleStats w = cycle_stats({1.0, -1.0});
    CHECK(w.mean_t > 0.0);
    CHECK(w.var_t > 0.0);
}

TEST_CASE("small bands keep a non-negative variance", "[cycle_stats]") {
    for (double a : {-2.0, 0.0, 1.3}) {
        for (double gap : {1e-3, 1e-6, 1e-9, 1e-12}) {
            CHECK(cycle_time_variance({a + gap, a}) >= 0.0);
        }
    }
}

TEST_CASE("analytic moments sit inside simulated confidence bands", "[cycle_stats]") {
    SimConfig cfg;
    cfg.dt = 1e-2;
    cfg.n_cycles = 100000;
    for (const Strategy& s : {Strategy{0.5, -0.5}, Strategy{2.0, -2.0}}) {
        CAPTURE(s.a, s.b);
        cfg.seed = 7;
        const CycleStats st = cycle_stats(s);
        const SimCycleEstimate est = estimate_cycle_stats(s, cfg);
        CHECK(std::abs(est.mean_t - st.mean_t) <= 3.0 * est.stderr_mean);
        CHECK(std::abs(est.var_t - st.var_t) <= 3.0 * est.stderr_var);
    }
}
