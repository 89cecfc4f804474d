#ifndef OUPAIRS_MISSPEC_HPP
#define OUPAIRS_MISSPEC_HPP

/**
 * @file misspec.hpp
 * @brief Cost of trading on wrong OU parameters.
 *
 * A trader who believes the spread follows believed_params optimizes in the
 * believed standardized frame, converts the thresholds to price levels
 * (a~, b~) and keeps them fixed. The realized performance is what those price
 * levels earn under true_params.
 */

#include <optional>
#include <vector>

#include "oupairs/optimizer.hpp"
#include "oupairs/types.hpp"

namespace oupairs {

struct MisspecScenario {
    OUParams true_params;
    OUParams believed_params;
    double cost_general = 0.0;                      ///< c~, price units
    std::optional<double> risk_bound_general;       ///< v0~, price^2 / time
};

struct MisspecOutcome {
    GeneralStrategy believed_strategy;    ///< price levels actually traded
    GeneralPerformance believed_perf;     ///< what the trader expects
    GeneralPerformance realized_perf;     ///< what the levels earn under true_params
    bool realized_feasible = true;        ///< realized V~ <= v0~ (true without a bound)
    bool constraint_active = false;       ///< bound binds in the believed frame
    Strategy believed_standardized;       ///< thresholds in the believed frame
    Strategy realized_standardized;       ///< same price levels in the true frame
};

/**
 * @brief Believed and realized performance for one scenario.
 *
 * Throws DomainError if the realized standardized thresholds are not ordered;
 * propagates optimizer failures.
 */
MisspecOutcome analyze(const MisspecScenario& scenario, double eps = kDefaultRiskEps);

struct FrontierComparisonRow {
    double v0_general = 0.0;
    double believed_V = 0.0;
    double believed_Pi = 0.0;
    double realized_V = 0.0;
    double realized_Pi = 0.0;
};

/**
 * @brief Sweep v0~ over the believed frontier's variance range.
 *
 * Rows use v0~ = top * i / n_points for i = 1..n_points, where top is the
 * scenario's risk_bound_general when set and otherwise the believed
 * unconstrained optimum's V~. The scenario's own bound is otherwise ignored.
 */
std::vector<FrontierComparisonRow> frontier_comparison(const MisspecScenario& scenario,
                                                       int n_points,
                                                       double eps = kDefaultRiskEps);

/// One-at-a-time believed-parameter grid around the truth: mu +/- 5 stationary
/// standard deviations, tau and sigma2 scaled by 0.5 and 1.5.
std::vector<MisspecScenario> default_misspec_grid(const OUParams& truth, double cost_general,
                                                  std::optional<double> risk_bound_general = {});

}  // namespace oupairs

#endif  // OUPAIRS_MISSPEC_HPP
