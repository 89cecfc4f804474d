#ifndef OUPAIRS_OPTIMIZER_HPP
#define OUPAIRS_OPTIMIZER_HPP

/**
 * @file optimizer.hpp
 * @brief Threshold optimization over symmetric strategies (a, -a).
 *
 * maximize_unconstrained finds a* = argmax Pi(a, -a) on (c/2, inf).
 * solve_risk_constrained adds the bound V(a, -a) <= v0 and bisects on
 * [c/2, a*], where V rises from 0 at the break-even point c/2. Before
 * bisecting it checks that V is increasing on a 32-point grid and falls back
 * to a grid scan (flagging the result) if it is not.
 */

#include <vector>

#include "oupairs/types.hpp"

namespace oupairs {

inline constexpr double kDefaultArgTol = 1e-8;
inline constexpr double kDefaultRiskEps = 1e-6;
inline constexpr int kMonotonicityProbes = 32;

struct RiskBound {
    double v0 = 0.0;
};

struct OptResult {
    Strategy strategy;
    Performance performance;
    bool constraint_active = false;
    double residual = 0.0;            ///< |V - v0| when the constraint is active
    bool monotonicity_anomaly = false;  ///< safeguard tripped; result came from a grid scan
    int iterations = 0;
};

struct FrontierPoint {
    double a = 0.0;
    double variance_rate = 0.0;
    double profit_rate = 0.0;
};

/// Golden-section maximization of Pi(a, -a). Throws ConvergenceError if no
/// bracket is found in (c/2, c/2 + 50].
OptResult maximize_unconstrained(double c, double tol = kDefaultArgTol);

/// Bisection on [c/2, a*] until |V(a, -a) - v0| <= eps.
OptResult solve_risk_constrained(double c, RiskBound bound, double eps = kDefaultRiskEps,
                                 double tol = kDefaultArgTol);

/// n_points samples (a, V, Pi) with a equally spaced on [c/2, a*], endpoints included.
std::vector<FrontierPoint> efficient_frontier(double c, int n_points,
                                              double tol = kDefaultArgTol);

/// Pi(a, -a) and (Pi, V)(a, -a); a = c/2 gives exactly zero.
double symmetric_profit_rate(double a, double c);
Performance symmetric_performance(double a, double c);

}  // namespace oupairs

#endif  // OUPAIRS_OPTIMIZER_HPP
