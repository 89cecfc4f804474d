#ifndef OUPAIRS_SIMULATOR_HPP
#define OUPAIRS_SIMULATOR_HPP

/**
 * @file simulator.hpp
 * @brief Monte Carlo reference for cycle and profit statistics.
 *
 * Paths are advanced with the exact OU transition, so the marginal law at
 * grid points is unbiased. Within a step, e^t Y is a Brownian motion run on
 * the clock e^{2t} - 1, and each threshold becomes a boundary that is linear
 * to first order in the step length. Touches between grid points are
 * therefore drawn from the Brownian-bridge crossing law against that
 * boundary, with the touch time drawn from the bridge's hitting-time law.
 * After a touch the rest of the step is scanned for the next level, so
 * several threshold events can fall inside one step.
 *
 * Every replication (or block of cycles) draws from its own substream derived
 * from (seed, index), so results are bit-identical for any thread count.
 */

#include <cstdint>
#include <vector>

#include "oupairs/types.hpp"

namespace oupairs {

struct SimConfig {
    double dt = 1e-3;                               ///< step in standardized time
    std::uint64_t seed = 0;
    std::int64_t n_cycles = 100000;                 ///< for estimate_cycle_stats
    std::int64_t max_steps_per_cycle = 500'000'000;  ///< BudgetError beyond this
    int threads = 0;                                ///< 0: OU_PAIRS_THREADS or all cores

    void validate() const;
};

struct SimCycleEstimate {
    double mean_t = 0.0;
    double var_t = 0.0;
    double stderr_mean = 0.0;
    double stderr_var = 0.0;
    std::int64_t n = 0;
};

struct SimProfitEstimate {
    double mean_rate = 0.0;    ///< mean of pi N_t / t
    double var_rate = 0.0;     ///< var(pi N_t) / t
    double stderr_mean = 0.0;
    double stderr_var = 0.0;
    std::int64_t replications = 0;
    double horizon = 0.0;
    bool short_horizon = false;  ///< horizon < 50 E[T]
};

/// Cycles per substream block in estimate_cycle_stats.
inline constexpr std::int64_t kCyclesPerBlock = 10000;

/// X at times 0, dt, ..., n_steps dt starting from x0 (n_steps + 1 values).
std::vector<double> sample_path(const OUParams& params, double x0, double dt,
                                std::int64_t n_steps, std::uint64_t seed);

/// Durations of cfg.n_cycles complete cycles, each block of paths starting at an entry.
std::vector<double> simulate_cycle_durations(const Strategy& strat, const SimConfig& cfg);

/// Sample mean and variance of cycle durations with standard errors.
SimCycleEstimate estimate_cycle_stats(const Strategy& strat, const SimConfig& cfg);

/**
 * @brief Completed cycles N_t over [0, horizon], one count per replication.
 *
 * Each replication starts from the stationary law N(0, 1) and waits for the
 * first touch of a before counting.
 */
std::vector<std::int64_t> simulate_cycle_counts(const Strategy& strat, double horizon,
                                                std::int64_t replications, const SimConfig& cfg);

/// Long-run profit rate and variance rate estimated from pi N_t.
SimProfitEstimate estimate_profit_statistics(const CostedStrategy& cs, double horizon,
                                             std::int64_t replications, const SimConfig& cfg);

}  // namespace oupairs

#endif  // OUPAIRS_SIMULATOR_HPP
