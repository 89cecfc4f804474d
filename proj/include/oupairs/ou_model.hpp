#ifndef OUPAIRS_OU_MODEL_HPP
#define OUPAIRS_OU_MODEL_HPP

/**
 * @file ou_model.hpp
 * @brief General OU parametrization and the standardizing change of variables.
 *
 * The spread follows dX = tau (mu - X) ds + sigma dW. The map
 *
 *   y = sqrt(2 tau / sigma^2) (x - mu),   t = tau s
 *
 * turns it into the standardized process dY = -Y dt + sqrt(2) dW with unit
 * stationary variance. Thresholds and costs scale with sqrt(2 tau / sigma^2);
 * the profit rate scales with sqrt(tau sigma^2 / 2) and the variance rate
 * with sigma^2 / 2 on the way back.
 */

#include "oupairs/types.hpp"

namespace oupairs {

/// c~ = 2 c_A + 2 eta c_B, the round-trip cost of one unit spread position.
double combined_cost(const PairSpec& spec);

/// Standardized cost c = sqrt(2 tau / sigma^2) c~. Throws DomainError for c~ < 0.
double standardize_cost(const OUParams& p, double c_tilde);
double destandardize_cost(const OUParams& p, double c);

/// Standardized variance-rate bound v0 = 2 v0~ / sigma^2.
double standardize_variance_bound(const OUParams& p, double v0_tilde);

struct StandardPoint {
    double y = 0.0;
    double t = 0.0;
};

struct GeneralPoint {
    double x = 0.0;
    double s = 0.0;
};

StandardPoint standardize_point(const OUParams& p, double x, double s);
GeneralPoint destandardize_point(const OUParams& p, double y, double t);

/// a~ = sqrt(sigma^2 / 2 tau) a + mu, same for b.
GeneralStrategy destandardize_strategy(const OUParams& p, const Strategy& strat);
Strategy standardize_strategy(const OUParams& p, const GeneralStrategy& strat);

/// Pi~ = sqrt(tau sigma^2 / 2) Pi,  V~ = (sigma^2 / 2) V.
GeneralPerformance destandardize_performance(const OUParams& p, const Performance& perf);

/// Conditional law of X_{s+dt} given X_s = x0.
struct Transition {
    double mean = 0.0;
    double variance = 0.0;
};

/**
 * @brief Exact one-step transition of the OU process.
 *
 *   mean     = mu + (x0 - mu) e^{-tau dt}
 *   variance = sigma^2 / (2 tau) (1 - e^{-2 tau dt})
 *
 * Throws DomainError for dt <= 0.
 */
Transition transition(const OUParams& p, double x0, double dt);

}  // namespace oupairs

#endif  // OUPAIRS_OU_MODEL_HPP
