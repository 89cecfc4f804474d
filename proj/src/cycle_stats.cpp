#include "oupairs/cycle_stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "oupairs/errors.hpp"
#include "oupairs/specfun.hpp"

namespace oupairs {

namespace {

void require_ordered(const Strategy& s, const char* fn) {
    if (!std::isfinite(s.a) || !std::isfinite(s.b)) {
        throw DomainError(std::string(fn) + ": thresholds must be finite");
    }
    if (s.a < s.b) {
        throw DomainError(std::string(fn) + ": entry level a must not be below exit level b");
    }
}

bool negligible(double term, double sum) {
    return std::abs(term) <= kSeriesRelTol * std::max(1.0, std::abs(sum));
}

}  // namespace

EndpointSeries endpoint_series(double xi, int max_terms) {
    const double x = std::numbers::sqrt2 * xi;
    const double x2 = x * x;

    EndpointSeries out;
    double t_odd = std::sqrt(std::numbers::pi) * x;  // Gamma(1/2) x
    double t_even = 0.5 * x2;                        // Gamma(1) x^2 / 2!
    // psi(k - 1/2) - psi(1) at k = 1
    double shifted_psi = specfun::digamma_half_integer(0) + specfun::euler_gamma;

    for (int k = 1; k <= max_terms; ++k) {
        out.odd += t_odd;
        out.even += t_even;
        out.w2 += t_odd * shifted_psi;
        out.terms = k;

        const double r_odd = (k - 0.5) * x2 / ((2.0 * k) * (2.0 * k + 1.0));
        const double r_even = k * x2 / ((2.0 * k + 1.0) * (2.0 * k + 2.0));
        t_odd *= r_odd;
        t_even *= r_even;
        shifted_psi += 2.0 / (2.0 * k - 1.0);

        // The digamma weight grows like ln k, so w2's next term is bounded by
        // t_odd * |shifted_psi|.
        const bool past_peak = r_odd < 1.0 && r_even < 1.0;
        if (past_peak && negligible(t_odd, out.odd) && negligible(t_even, out.even) &&
            negligible(t_odd * shifted_psi, out.w2)) {
            return out;
        }
    }
    throw ConvergenceError("endpoint_series: no convergence within " + std::to_string(max_terms) +
                           " terms at xi = " + std::to_string(xi));
}

CycleStats cycle_stats(const Strategy& strat, int max_terms) {
    require_ordered(strat, "cycle_stats");
    if (strat.a == strat.b) return {0.0, 0.0};

    const EndpointSeries at_a = endpoint_series(strat.a, max_terms);
    const EndpointSeries at_b = endpoint_series(strat.b, max_terms);

    const double mean_t = at_a.odd - at_b.odd;
    const double f_a = at_a.odd * at_a.even - at_a.w2;
    const double f_b = at_b.odd * at_b.even - at_b.w2;
    double var_t = f_a - f_b;
    if (var_t < 0.0) {
        const double scale = std::max(1.0, std::abs(f_a) + std::abs(f_b));
        if (var_t < -1e-10 * scale) {
            throw NumericalError("cycle_stats: negative variance beyond round-off");
        }
        var_t = 0.0;
    }
    return {mean_t, var_t};
}

double expected_cycle_time(const Strategy& strat) {
    require_ordered(strat, "expected_cycle_time");
    if (strat.a == strat.b) return 0.0;
    return endpoint_series(strat.a).odd - endpoint_series(strat.b).odd;
}

double cycle_time_variance(const Strategy& strat) {
    require_ordered(strat, "cycle_time_variance");
    return cycle_stats(strat).var_t;
}

}  // namespace oupairs
