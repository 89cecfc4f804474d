#ifndef OUPAIRS_CYCLE_STATS_HPP
#define OUPAIRS_CYCLE_STATS_HPP

/**
 * @file cycle_stats.hpp
 * @brief Mean and variance of the trade-cycle duration of the standardized OU.
 *
 * A cycle is the time from hitting the entry level a, through hitting the exit
 * level b, back to a. With x = sqrt(2) xi the per-endpoint series are
 *
 *   odd(xi)  = sum_{k>=1} Gamma(k - 1/2) x^{2k-1} / (2k-1)!
 *   even(xi) = sum_{k>=1} Gamma(k)       x^{2k}   / (2k)!
 *   w2(xi)   = sum_{k>=1} Gamma(k - 1/2) [psi(k - 1/2) - psi(1)] x^{2k-1} / (2k-1)!
 *
 * and
 *
 *   E[T]   = odd(a) - odd(b)
 *   var T  = w1(a) - w1(b) - w2(a) + w2(b),   w1 = odd * even.
 *
 * odd and even are the odd and even parts of u(xi) = 1/2 sum Gamma(k/2) x^k / k!:
 * u(xi) - u(-xi) = odd(xi), u(xi) + u(-xi) = even(xi), so w1 = u(xi)^2 - u(-xi)^2.
 *
 * The digamma weight in w2 is shifted by psi(1) = -gamma. Without the shift
 * the combination overstates var T by exactly gamma * E[T]; the shifted form
 * agrees with quadrature of the first-passage moment equations and with the
 * Monte Carlo simulator.
 */

#include "oupairs/types.hpp"

namespace oupairs {

/// Relative truncation threshold shared by all series.
inline constexpr double kSeriesRelTol = 1e-14;
/// Hard cap on the number of terms per series.
inline constexpr int kSeriesMaxTerms = 500;

/// Per-endpoint partial sums. odd and w2 are odd in xi, even is even.
struct EndpointSeries {
    double odd = 0.0;
    double even = 0.0;
    double w2 = 0.0;
    int terms = 0;
};

/**
 * @brief Evaluate the three per-endpoint series at xi.
 *
 * Terms follow exact ratios, so no factorial or Gamma value is formed:
 *   odd:  t_{k+1} / t_k = (k - 1/2) x^2 / ((2k)(2k+1))
 *   even: t_{k+1} / t_k = k x^2 / ((2k+1)(2k+2))
 * Summation stops once every term is past its peak and below
 * kSeriesRelTol * max(1, |partial sum|). Throws ConvergenceError when
 * max_terms is reached first.
 */
EndpointSeries endpoint_series(double xi, int max_terms = kSeriesMaxTerms);

/// E[T] for entry a and exit b. Requires a >= b; a == b returns 0.
double expected_cycle_time(const Strategy& strat);

/// var T for entry a and exit b. Requires a >= b; tiny negative round-off is clamped to 0.
double cycle_time_variance(const Strategy& strat);

/// Both statistics from one pass over the endpoint series.
CycleStats cycle_stats(const Strategy& strat, int max_terms = kSeriesMaxTerms);

}  // namespace oupairs

#endif  // OUPAIRS_CYCLE_STATS_HPP
