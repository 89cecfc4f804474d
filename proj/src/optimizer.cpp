#include "oupairs/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "oupairs/errors.hpp"
#include "oupairs/strategy_eval.hpp"

namespace oupairs {

namespace {

constexpr double kBracketReach = 50.0;
constexpr int kGridFallbackPoints = 20001;
constexpr int kMaxBisections = 200;

void require_cost(double c, const char* fn) {
    if (!std::isfinite(c) || !(c > 0.0)) {
        throw DomainError(std::string(fn) + ": cost must be positive and finite");
    }
}

void require_tol(double tol, const char* fn, const char* name) {
    if (!std::isfinite(tol) || !(tol > 0.0)) {
        throw DomainError(std::string(fn) + ": " + name + " must be positive");
    }
}

double variance_at(double a, double c) { return symmetric_performance(a, c).variance_rate; }

OptResult make_result(double a, double c) {
    OptResult r;
    r.strategy = {a, -a};
    r.performance = symmetric_performance(a, c);
    return r;
}

// Largest-profit grid point on [lo, hi] satisfying V <= v0.
OptResult grid_fallback(double c, double lo, double hi, double v0) {
    double best_a = lo;
    double best_pi = 0.0;
    for (int i = 0; i < kGridFallbackPoints; ++i) {
        const double a = lo + (hi - lo) * i / (kGridFallbackPoints - 1);
        const Performance p = symmetric_performance(a, c);
        if (p.variance_rate <= v0 && p.profit_rate > best_pi) {
            best_pi = p.profit_rate;
            best_a = a;
        }
    }
    OptResult r = make_result(best_a, c);
    r.constraint_active = true;
    r.residual = std::abs(r.performance.variance_rate - v0);
    r.monotonicity_anomaly = true;
    r.iterations = kGridFallbackPoints;
    return r;
}

}  // namespace

// At a = c/2 the profit a - (-a) - c is exactly zero in floating point, so
// the break-even point evaluates to (0, 0) without special casing.
Performance symmetric_performance(double a, double c) { return evaluate({{a, -a}, c}); }

double symmetric_profit_rate(double a, double c) { return expected_profit_rate({{a, -a}, c}); }

OptResult maximize_unconstrained(double c, double tol) {
    require_cost(c, "maximize_unconstrained");
    require_tol(tol, "maximize_unconstrained", "tol");

    const double lo = c / 2.0;
    const auto pi = [c](double a) { return symmetric_profit_rate(a, c); };

    // Geometric expansion until the profit rate turns down.
    const double step0 = std::max(0.01, 0.05 * c);
    double x0 = lo;
    double x1 = lo + step0;
    double f1 = pi(x1);
    double x2 = lo + 2.0 * step0;
    double f2 = pi(x2);
    double step = 2.0 * step0;
    while (f2 > f1) {
        if (x2 > lo + kBracketReach) {
            throw ConvergenceError("maximize_unconstrained: no maximum bracketed within c/2 + " +
                                   std::to_string(kBracketReach));
        }
        x0 = x1;
        x1 = x2;
        f1 = f2;
        step *= 2.0;
        x2 = lo + step;
        f2 = pi(x2);
    }

    // Golden-section search on [x0, x2].
    constexpr double inv_phi = 0.61803398874989484820;  // 1 / golden ratio
    double a = x0;
    double b = x2;
    double c1 = b - inv_phi * (b - a);
    double c2 = a + inv_phi * (b - a);
    double g1 = pi(c1);
    double g2 = pi(c2);
    int iterations = 0;
    while (b - a > tol) {
        ++iterations;
        if (g1 < g2) {
            a = c1;
            c1 = c2;
            g1 = g2;
            c2 = a + inv_phi * (b - a);
            g2 = pi(c2);
        } else {
            b = c2;
            c2 = c1;
            g2 = g1;
            c1 = b - inv_phi * (b - a);
            g1 = pi(c1);
        }
    }
    const double a_star = g1 >= g2 ? c1 : c2;
    OptResult r = make_result(a_star, c);
    r.iterations = iterations;
    return r;
}

OptResult solve_risk_constrained(double c, RiskBound bound, double eps, double tol) {
    require_cost(c, "solve_risk_constrained");
    require_tol(eps, "solve_risk_constrained", "eps");
    if (!std::isfinite(bound.v0) || !(bound.v0 > 0.0)) {
        throw DomainError("solve_risk_constrained: v0 must be positive and finite");
    }
    const double v0 = bound.v0;

    OptResult unconstrained = maximize_unconstrained(c, tol);
    if (unconstrained.performance.variance_rate <= v0) return unconstrained;

    double lower = c / 2.0;
    double upper = unconstrained.strategy.a;

    double prev = 0.0;
    for (int i = 1; i <= kMonotonicityProbes; ++i) {
        const double v = variance_at(lower + (upper - lower) * i / kMonotonicityProbes, c);
        if (!(v > prev)) return grid_fallback(c, lower, upper, v0);
        prev = v;
    }

    int iterations = 0;
    double mid = 0.5 * (lower + upper);
    double v_mid = variance_at(mid, c);
    while (std::abs(v_mid - v0) > eps) {
        if (++iterations > kMaxBisections || mid == lower || mid == upper) {
            throw ConvergenceError("solve_risk_constrained: bisection stalled with |V - v0| = " +
                                   std::to_string(std::abs(v_mid - v0)) + " > eps");
        }
        if (v_mid > v0) {
            upper = mid;
        } else {
            lower = mid;
        }
        mid = 0.5 * (lower + upper);
        v_mid = variance_at(mid, c);
    }

    OptResult r = make_result(mid, c);
    r.constraint_active = true;
    r.residual = std::abs(r.performance.variance_rate - v0);
    r.iterations = iterations;
    return r;
}

std::vector<FrontierPoint> efficient_frontier(double c, int n_points, double tol) {
    require_cost(c, "efficient_frontier");
    if (n_points < 2) throw DomainError("efficient_frontier: n_points must be at least 2");

    const double lo = c / 2.0;
    const double hi = maximize_unconstrained(c, tol).strategy.a;

    std::vector<FrontierPoint> out;
    out.reserve(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) {
        const double a = i == n_points - 1 ? hi : lo + (hi - lo) * i / (n_points - 1);
        const Performance p = symmetric_performance(a, c);
        out.push_back({a, p.variance_rate, p.profit_rate});
    }
    return out;
}

}  // namespace oupairs
