#include "oupairs/strategy_eval.hpp"

#include <cmath>
#include <string>

#include "oupairs/cycle_stats.hpp"
#include "oupairs/errors.hpp"

namespace oupairs {

namespace {

void require_tradable(const CostedStrategy& cs, const char* fn) {
    const auto& s = cs.strategy;
    if (!std::isfinite(s.a) || !std::isfinite(s.b) || !std::isfinite(cs.c)) {
        throw DomainError(std::string(fn) + ": inputs must be finite");
    }
    if (!(s.a > s.b)) throw DomainError(std::string(fn) + ": requires a > b");
    if (cs.c < 0.0) throw DomainError(std::string(fn) + ": cost must be non-negative");
}

double rate(double profit, double mean_t) { return profit / mean_t; }

double variance_rate(double profit, const CycleStats& st) {
    return profit * profit * st.var_t / (st.mean_t * st.mean_t * st.mean_t);
}

}  // namespace

double cycle_profit(const CostedStrategy& cs) {
    return 2.0 * (cs.strategy.a - cs.strategy.b - cs.c);
}

double expected_profit_rate(const CostedStrategy& cs) {
    require_tradable(cs, "expected_profit_rate");
    return rate(cycle_profit(cs), expected_cycle_time(cs.strategy));
}

double profit_rate_variance(const CostedStrategy& cs) {
    require_tradable(cs, "profit_rate_variance");
    return variance_rate(cycle_profit(cs), cycle_stats(cs.strategy));
}

Performance evaluate(const CostedStrategy& cs) {
    require_tradable(cs, "evaluate");
    const CycleStats st = cycle_stats(cs.strategy);
    const double profit = cycle_profit(cs);
    return {rate(profit, st.mean_t), variance_rate(profit, st)};
}

}  // namespace oupairs
