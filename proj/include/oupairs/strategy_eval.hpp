#ifndef OUPAIRS_STRATEGY_EVAL_HPP
#define OUPAIRS_STRATEGY_EVAL_HPP

#include "oupairs/types.hpp"

namespace oupairs {

/// Profit per completed cycle, pi = 2 (a - b - c).
double cycle_profit(const CostedStrategy& cs);

/// Pi = pi / E[T]. Requires a > b and c >= 0.
double expected_profit_rate(const CostedStrategy& cs);

/// V = pi^2 var T / E[T]^3. Requires a > b and c >= 0.
double profit_rate_variance(const CostedStrategy& cs);

/// Pi and V from a single cycle_stats evaluation; bit-identical to the two calls above.
Performance evaluate(const CostedStrategy& cs);

}  // namespace oupairs

#endif  // OUPAIRS_STRATEGY_EVAL_HPP
