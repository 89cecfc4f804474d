#include <catch_amalgamated.hpp>

#include <cmath>

#include "oracles.hpp"
#include "oupairs/errors.hpp"
#include "oupairs/optimizer.hpp"
#include "oupairs/strategy_eval.hpp"

using namespace oupairs;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("unconstrained optimum is symmetric and locally maximal", "[optimizer]") {
    for (double c : {0.014, 0.2, 1.0, 2.5}) {
        CAPTURE(c);
        const OptResult r = maximize_unconstrained(c);
        CHECK(r.strategy.b == -r.strategy.a);
        CHECK(r.strategy.a > c / 2.0);
        CHECK(std::isfinite(r.strategy.a));
        CHECK_FALSE(r.constraint_active);
        CHECK(r.residual == 0.0);
        const double delta = 10.0 * kDefaultArgTol;
        const double best = r.performance.profit_rate;
        CHECK(symmetric_profit_rate(r.strategy.a + delta, c) <= best);
        CHECK(symmetric_profit_rate(r.strategy.a - delta, c) <= best);
        const Performance again = symmetric_performance(r.strategy.a, c);
        CHECK(r.performance.profit_rate == again.profit_rate);
        CHECK(r.performance.variance_rate == again.variance_rate);
    }
}

TEST_CASE("unconstrained optimum matches a grid scan", "[optimizer]") {
    const OptResult r = maximize_unconstrained(1.0);
    const double grid = oracle::grid_argmax_symmetric(1.0, 0.5, 10.0, 1e-4);
    CHECK_THAT(r.strategy.a, WithinAbs(grid, 2e-4));
    // reference optima
    CHECK_THAT(r.strategy.a, WithinAbs(1.2644, 1e-4));
    CHECK_THAT(maximize_unconstrained(0.2).strategy.a, WithinAbs(0.6906, 1e-4));
    CHECK_THAT(maximize_unconstrained(0.014).strategy.a, WithinAbs(0.2773, 1e-4));
}

TEST_CASE("unconstrained solver rejects invalid costs", "[optimizer]") {
    CHECK_THROWS_AS(maximize_unconstrained(0.0), DomainError);
    CHECK_THROWS_AS(maximize_unconstrained(-1.0), DomainError);
    CHECK_THROWS_AS(maximize_unconstrained(1.0, 0.0), DomainError);
}

TEST_CASE("a slack risk bound returns the unconstrained optimum", "[optimizer]") {
    const OptResult free = maximize_unconstrained(1.0);
    for (double v0 : {free.performance.variance_rate, 0.5, 10.0}) {
        const OptResult r = solve_risk_constrained(1.0, {v0});
        CHECK(r.strategy == free.strategy);
        CHECK_FALSE(r.constraint_active);
        CHECK(r.residual == 0.0);
    }
}

TEST_CASE("binding risk bound", "[optimizer]") {
    const double eps = 1e-6;
    const OptResult free = maximize_unconstrained(1.0);
    const OptResult r = solve_risk_constrained(1.0, {0.05}, eps);
    CHECK(r.constraint_active);
    CHECK_FALSE(r.monotonicity_anomaly);
    CHECK(r.strategy.b == -r.strategy.a);
    CHECK(r.strategy.a < free.strategy.a);
    CHECK(r.strategy.a - r.strategy.b - 1.0 >= 0.0);
    CHECK(std::abs(r.performance.variance_rate - 0.05) <= eps);
    CHECK(r.residual == std::abs(r.performance.variance_rate - 0.05));
    CHECK(r.performance.profit_rate < free.performance.profit_rate);
    // iteration count is logarithmic in the bracket width
    CHECK(r.iterations <= 60);
}

TEST_CASE("binding risk bound agrees with a dense constrained grid scan", "[optimizer]") {
    const double c = 1.0;
    const double v0 = 0.05;
    const double eps = 1e-6;
    const OptResult r = solve_risk_constrained(c, {v0}, eps);
    const OptResult free = maximize_unconstrained(c);
    double best_a = c / 2.0;
    double best_pi = 0.0;
    const int n = 200000;
    for (int i = 0; i <= n; ++i) {
        const double a = c / 2.0 + (free.strategy.a - c / 2.0) * i / n;
        const Performance p = symmetric_performance(a, c);
        if (p.variance_rate <= v0 + eps && p.profit_rate > best_pi) {
            best_pi = p.profit_rate;
            best_a = a;
        }
    }
    const double grid_v = symmetric_performance(best_a, c).variance_rate;
    CHECK(std::abs(grid_v - r.performance.variance_rate) <= 2.0 * eps);
}

TEST_CASE("tight bounds and tiny tolerances still terminate", "[optimizer]") {
    for (double v0 : {1e-8, 1e-4, 0.2}) {
        const OptResult r = solve_risk_constrained(0.2, {v0}, 1e-9);
        CHECK(r.constraint_active);
        CHECK(std::abs(r.performance.variance_rate - v0) <= 1e-9);
    }
    CHECK_THROWS_AS(solve_risk_constrained(0.2, {0.0}), DomainError);
    CHECK_THROWS_AS(solve_risk_constrained(0.2, {0.1}, 0.0), DomainError);
}

TEST_CASE("efficient frontier endpoints and shape", "[optimizer]") {
    for (double c : {0.2, 1.0}) {
        const auto f = efficient_frontier(c, 100);
        REQUIRE(f.size() == 100);
        CHECK(f.front().a == c / 2.0);
        CHECK(f.front().profit_rate == 0.0);
        CHECK(f.front().variance_rate == 0.0);
        const OptResult free = maximize_unconstrained(c);
        CHECK(f.back().a == free.strategy.a);
        CHECK(f.back().profit_rate == free.performance.profit_rate);
        CHECK(f.back().variance_rate == free.performance.variance_rate);
        for (std::size_t i = 1; i < f.size(); ++i) {
            CHECK(f[i].profit_rate > f[i - 1].profit_rate);
            CHECK(f[i].variance_rate > f[i - 1].variance_rate);
            CHECK(f[i].a > f[i - 1].a);
        }
    }
    const auto f = efficient_frontier(0.2, 100);
    CHECK_THAT(f.front().a, WithinAbs(0.1, 1e-15));
    CHECK_THROWS_AS(efficient_frontier(0.2, 1), DomainError);
}

TEST_CASE("symmetric strategies dominate asymmetric ones", "[optimizer]") {
    // Each strategy is compared with the frontier point at its own variance
    // rate, or with the unconstrained optimum above the top of the frontier.
    for (double c : {0.2, 1.0}) {
        const OptResult free = maximize_unconstrained(c);
        int violations = 0;
        for (double a = -1.0; a <= 3.0; a += 0.1) {
            for (double b = -3.0; b <= 1.0; b += 0.1) {
                if (a - b - c < 0.0 || a - b <= 0.0) continue;
                const Performance p = evaluate({{a, b}, c});
                double frontier_pi = free.performance.profit_rate;
                if (p.variance_rate <= 0.0) {
                    frontier_pi = 0.0;
                } else if (p.variance_rate < free.performance.variance_rate) {
                    frontier_pi = solve_risk_constrained(c, {p.variance_rate}, 1e-12)
                                      .performance.profit_rate;
                }
                if (frontier_pi < p.profit_rate - 1e-9) ++violations;
            }
        }
        CHECK(violations == 0);
    }
}
