#ifndef OUPAIRS_TYPES_HPP
#define OUPAIRS_TYPES_HPP

/**
 * @file types.hpp
 * @brief Value types shared across the library.
 *
 * Two coordinate systems appear throughout:
 *  - general: the spread X_s in price units and calendar time s,
 *    dX = tau (mu - X) ds + sigma dW;
 *  - standardized: Y_t = sqrt(2 tau / sigma^2) (X_s - mu), t = tau s, which
 *    has zero mean and unit stationary variance.
 * Strategy, CostedStrategy, CycleStats and Performance live in standardized
 * coordinates; the General* types live in price units.
 */

namespace oupairs {

/**
 * @brief Ornstein-Uhlenbeck parameters in general parametrization.
 *
 * The defaults (mu = 0, tau = 1, sigma2 = 2) describe the standardized
 * process itself, so standardizing with them is the identity.
 */
struct OUParams {
    double mu = 0.0;      ///< long-term mean, price units
    double tau = 1.0;     ///< mean-reversion speed, 1/time
    double sigma2 = 2.0;  ///< squared volatility, price^2/time

    /// Throws DomainError unless tau > 0, sigma2 > 0 and all fields are finite.
    void validate() const;

    double stationary_variance() const noexcept { return sigma2 / (2.0 * tau); }

    friend bool operator==(const OUParams&, const OUParams&) = default;
};

/// Cointegration weight and per-unit transaction costs of the two legs.
struct PairSpec {
    double eta = 1.0;
    double cost_a = 0.0;
    double cost_b = 0.0;

    void validate() const;
};

/// Standardized entry level a and exit level b (a > b for a tradable strategy).
struct Strategy {
    double a = 0.0;
    double b = 0.0;

    friend bool operator==(const Strategy&, const Strategy&) = default;
};

/// Strategy plus standardized round-trip transaction cost c >= 0.
struct CostedStrategy {
    Strategy strategy;
    double c = 0.0;
};

/// Mean and variance of the trade-cycle duration, standardized time.
struct CycleStats {
    double mean_t = 0.0;
    double var_t = 0.0;
};

/// Expected profit per time unit and long-run variance rate, standardized.
struct Performance {
    double profit_rate = 0.0;
    double variance_rate = 0.0;
};

/// Entry/exit levels in price units.
struct GeneralStrategy {
    double a_tilde = 0.0;
    double b_tilde = 0.0;
};

/// Profit rate and variance rate in price units and calendar time.
struct GeneralPerformance {
    double profit_rate = 0.0;
    double variance_rate = 0.0;
};

}  // namespace oupairs

#endif  // OUPAIRS_TYPES_HPP
