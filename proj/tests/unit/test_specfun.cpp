#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <numbers>

#include "oracles.hpp"
#include "oupairs/errors.hpp"
#include "oupairs/specfun.hpp"

using namespace oupairs;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("log_gamma matches closed forms", "[specfun]") {
    CHECK_THAT(specfun::log_gamma(1.0), WithinAbs(0.0, 1e-15));
    CHECK_THAT(specfun::log_gamma(2.0), WithinAbs(0.0, 1e-15));
    CHECK_THAT(specfun::log_gamma(0.5), WithinAbs(0.5 * std::log(std::numbers::pi), 1e-14));
    CHECK_THAT(specfun::log_gamma(10.0), WithinRel(std::log(362880.0), 1e-14));
    CHECK_THAT(specfun::log_gamma(1e-8), WithinRel(-std::log(1e-8) - 1e-8 * specfun::euler_gamma,
                                                   1e-12));
}

TEST_CASE("log_gamma at half integers matches the extended-precision recurrence", "[specfun]") {
    for (int n = 0; n <= 60; ++n) {
        const double x = n + 0.5;
        const double expected = static_cast<double>(std::log(oracle::gamma_half_integer(n)));
        CHECK_THAT(specfun::log_gamma(x), WithinAbs(expected, 1e-13 * std::max(1.0, expected)));
    }
}

TEST_CASE("log_gamma agrees with the C library over a wide range", "[specfun]") {
    for (double x = 0.01; x < 200.0; x *= 1.07) {
        const double ref = std::lgamma(x);
        CHECK_THAT(specfun::log_gamma(x), WithinAbs(ref, 1e-13 * std::max(1.0, std::abs(ref))));
    }
}

TEST_CASE("log_gamma satisfies the recurrence", "[specfun]") {
    for (double x = 0.05; x < 30.0; x += 0.37) {
        CHECK_THAT(specfun::log_gamma(x + 1.0) - specfun::log_gamma(x),
                   WithinAbs(std::log(x), 1e-13 * std::max(1.0, std::abs(specfun::log_gamma(x)))));
    }
}

TEST_CASE("digamma matches closed forms", "[specfun]") {
    const double g = specfun::euler_gamma;
    CHECK_THAT(specfun::digamma(1.0), WithinAbs(-g, 1e-15));
    CHECK_THAT(specfun::digamma(0.5), WithinAbs(-g - 2.0 * std::numbers::ln2, 1e-14));
    CHECK_THAT(specfun::digamma(2.0), WithinAbs(1.0 - g, 1e-15));
    CHECK_THAT(specfun::digamma(1.5), WithinAbs(2.0 - g - 2.0 * std::numbers::ln2, 1e-14));
    CHECK_THAT(specfun::digamma(100.0), WithinRel(4.600161852738087, 1e-14));
}

TEST_CASE("digamma satisfies the recurrence and matches a difference of log_gamma",
          "[specfun]") {
    for (double x = 0.03; x < 50.0; x *= 1.19) {
        CHECK_THAT(specfun::digamma(x + 1.0) - specfun::digamma(x), WithinAbs(1.0 / x, 1e-12 / x));
        const double h = 1e-4 * x;
        const double fd = (specfun::log_gamma(x + h) - specfun::log_gamma(x - h)) / (2.0 * h);
        CHECK_THAT(specfun::digamma(x), WithinAbs(fd, 1e-6 * std::max(1.0, std::abs(fd))));
    }
}

TEST_CASE("digamma_half_integer agrees with digamma", "[specfun]") {
    for (int n = 0; n <= 80; ++n) {
        CHECK_THAT(specfun::digamma_half_integer(n), WithinAbs(specfun::digamma(n + 0.5), 1e-13));
    }
    CHECK_THROWS_AS(specfun::digamma_half_integer(-1), DomainError);
}

TEST_CASE("special functions reject invalid arguments", "[specfun]") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    for (double x : {0.0, -1.0, -0.5, nan, inf}) {
        CHECK_THROWS_AS(specfun::log_gamma(x), DomainError);
        CHECK_THROWS_AS(specfun::digamma(x), DomainError);
    }
}

TEST_CASE("reference values", "[specfun]") {
    const long double g75 = oracle::gamma_half_integer(7);  // Gamma(7.5)
    CHECK_THAT(specfun::log_gamma(7.5), WithinRel(static_cast<double>(std::log(g75)), 1e-14));
    CHECK_THAT(specfun::digamma(2.5),
               WithinAbs(-specfun::euler_gamma - 2.0 * std::numbers::ln2 + 2.0 * (1.0 + 1.0 / 3.0),
                         1e-14));
}

TEST_CASE("shape of log_gamma and digamma", "[specfun]") {
    double prev = specfun::digamma(0.5);
    const double h = 0.01;
    for (double x = 0.51; x < 100.0; x += 0.37) {
        const double d = specfun::digamma(x);
        CHECK(d > prev);
        prev = d;
        const double second = specfun::log_gamma(x + h) - 2.0 * specfun::log_gamma(x) +
                              specfun::log_gamma(x - h);
        CHECK(second >= -1e-10);
    }
}
