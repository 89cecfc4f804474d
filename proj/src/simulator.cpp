#include "oupairs/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <string>

#include "oupairs/cycle_stats.hpp"
#include "oupairs/errors.hpp"
#include "oupairs/ou_model.hpp"
#include "oupairs/stats.hpp"
#include "oupairs/strategy_eval.hpp"
#include "parallel.hpp"

namespace oupairs {

namespace {

// Independent generator per (seed, stream) pair.
std::mt19937_64 substream(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32), 0x6f75u};
    return std::mt19937_64(seq);
}

// Next level to reach, and the side it is approached from.
struct Target {
    double level;
    bool from_below;
};

// Exact stepping of the standardized process dY = -Y dt + sqrt(2) dW with
// bridge-based detection of every level touch inside a step.
class StandardWalker {
public:
    StandardWalker(double dt, std::uint64_t seed, std::uint64_t stream)
        : dt_(dt),
          decay_(std::exp(-dt)),
          step_sd_(std::sqrt(-std::expm1(-2.0 * dt))),
          growth_(std::exp(dt)),
          span_(std::expm1(2.0 * dt)),
          rng_(substream(seed, stream)) {}

    double draw_stationary() { return normal_(rng_); }

    /**
     * Advances one step from y and returns the new value. Every touch of
     * `target` along the bridge is reported as on_touch(fraction), in time
     * order; the callback may retarget and returns false to stop scanning the
     * rest of the step.
     */
    template <class OnTouch>
    double advance(double y, Target& target, OnTouch&& on_touch) {
        const double y1 = decay_ * y + step_sd_ * normal_(rng_);
        double x = y;
        double f = 0.0;
        while (const auto hit = next_touch(x, y1, target, f)) {
            f = *hit;
            x = target.level;
            if (!on_touch(f)) break;
        }
        return y1;
    }

private:
    // First touch of the target by the path from x (at fraction f of the
    // step) to y1 (at the end), remaining length h. With Z = e^t Y and clock
    // u = e^{2t} - 1 the path is a Brownian bridge over [0, U], U = e^{2h} - 1,
    // and the level becomes a boundary that is linear to first order. At
    // endpoint distances d0 and d1 e^h from it, the bridge touches with
    // probability exp(-2 d0 d1 e^h / U), and the touch time u satisfies
    // u / (U - u) ~ inverse Gaussian(d0 / (d1 e^h), d0^2 / U).
    std::optional<double> next_touch(double x, double y1, const Target& target, double f) {
        if (!(f < 1.0)) return std::nullopt;
        const double d0 = target.from_below ? target.level - x : x - target.level;
        const double d1 = target.from_below ? target.level - y1 : y1 - target.level;
        if (d0 <= 0.0) return f;
        const bool whole = f == 0.0;
        const double h = dt_ * (1.0 - f);
        const double growth = whole ? growth_ : std::exp(h);
        const double span = whole ? span_ : std::expm1(2.0 * h);
        const double d1u = d1 * growth;
        if (d1 > 0.0) {
            const double exponent = 2.0 * d0 * d1u / span;
            if (exponent > 40.0 || uniform_(rng_) >= std::exp(-exponent)) return std::nullopt;
        }
        if (d1 == 0.0) return 1.0;
        const double ratio = inverse_gaussian(d0 / std::abs(d1u), d0 * d0 / span);
        const double u = span * ratio / (1.0 + ratio);
        return std::min(1.0, f + 0.5 * std::log1p(u) / dt_);
    }

    // Transformation-with-rejection sampler for the inverse Gaussian law.
    double inverse_gaussian(double mean, double shape) {
        const double z = normal_(rng_);
        const double my = mean * z * z;
        const double x = mean + mean * my / (2.0 * shape) -
                         mean / (2.0 * shape) * std::sqrt(4.0 * shape * my + my * my);
        if (uniform_(rng_) * (mean + x) <= mean) return x;
        return mean * mean / x;
    }

    double dt_;
    double decay_;
    double step_sd_;
    double growth_;
    double span_;
    std::mt19937_64 rng_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

void require_strategy(const Strategy& s, const char* fn) {
    if (!std::isfinite(s.a) || !std::isfinite(s.b) || !(s.a > s.b)) {
        throw DomainError(std::string(fn) + ": requires finite a > b");
    }
}

[[noreturn]] void over_budget(const SimConfig& cfg) {
    throw BudgetError("simulator: cycle exceeded " + std::to_string(cfg.max_steps_per_cycle) +
                      " steps; decrease dt or tighten thresholds");
}

}  // namespace

void SimConfig::validate() const {
    if (!std::isfinite(dt) || !(dt > 0.0)) throw DomainError("SimConfig: dt must be positive");
    if (n_cycles < 1) throw DomainError("SimConfig: n_cycles must be positive");
    if (max_steps_per_cycle < 1) throw DomainError("SimConfig: max_steps_per_cycle must be positive");
}

std::vector<double> sample_path(const OUParams& params, double x0, double dt,
                                std::int64_t n_steps, std::uint64_t seed) {
    params.validate();
    if (n_steps < 0) throw DomainError("sample_path: n_steps must be non-negative");
    const Transition step = transition(params, 0.0, dt);  // also validates dt
    const double decay = std::exp(-params.tau * dt);
    const double sd = std::sqrt(step.variance);

    auto rng = substream(seed, 0);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> path;
    path.reserve(static_cast<std::size_t>(n_steps) + 1);
    double x = x0;
    path.push_back(x);
    for (std::int64_t k = 0; k < n_steps; ++k) {
        x = params.mu + (x - params.mu) * decay + sd * normal(rng);
        path.push_back(x);
    }
    return path;
}

std::vector<double> simulate_cycle_durations(const Strategy& strat, const SimConfig& cfg) {
    require_strategy(strat, "simulate_cycle_durations");
    cfg.validate();

    const std::int64_t n_blocks = (cfg.n_cycles + kCyclesPerBlock - 1) / kCyclesPerBlock;
    std::vector<double> durations(static_cast<std::size_t>(cfg.n_cycles));

    detail::parallel_for(static_cast<std::size_t>(n_blocks), detail::resolve_threads(cfg.threads),
                         [&](std::size_t block) {
        const auto first = static_cast<std::int64_t>(block) * kCyclesPerBlock;
        const std::int64_t count = std::min(kCyclesPerBlock, cfg.n_cycles - first);
        StandardWalker walk(cfg.dt, cfg.seed, block);

        // Each block starts at an entry: y = a, heading for the exit level.
        double y = strat.a;
        Target target{strat.b, false};
        std::int64_t step = 0;
        std::int64_t last_entry_step = 0;
        double entry_time = 0.0;
        std::int64_t done = 0;
        const auto on_touch = [&](double frac) {
            if (!target.from_below) {
                target = {strat.a, true};
                return true;
            }
            const double t = (static_cast<double>(step) + frac) * cfg.dt;
            durations[static_cast<std::size_t>(first + done)] = t - entry_time;
            entry_time = t;
            last_entry_step = step;
            target = {strat.b, false};
            return ++done < count;
        };
        while (done < count) {
            y = walk.advance(y, target, on_touch);
            ++step;
            if (step - last_entry_step > cfg.max_steps_per_cycle) over_budget(cfg);
        }
    });
    return durations;
}

SimCycleEstimate estimate_cycle_stats(const Strategy& strat, const SimConfig& cfg) {
    if (cfg.n_cycles < 2) throw DomainError("estimate_cycle_stats: need at least two cycles");
    const std::vector<double> durations = simulate_cycle_durations(strat, cfg);
    const SampleMoments m = sample_moments(durations);
    return {m.mean, m.variance, m.stderr_mean, m.stderr_variance, m.n};
}

std::vector<std::int64_t> simulate_cycle_counts(const Strategy& strat, double horizon,
                                                std::int64_t replications, const SimConfig& cfg) {
    require_strategy(strat, "simulate_cycle_counts");
    cfg.validate();
    if (!std::isfinite(horizon) || !(horizon > 0.0)) {
        throw DomainError("simulate_cycle_counts: horizon must be positive");
    }
    if (replications < 1) throw DomainError("simulate_cycle_counts: replications must be positive");

    const auto n_steps = static_cast<std::int64_t>(std::ceil(horizon / cfg.dt));
    std::vector<std::int64_t> counts(static_cast<std::size_t>(replications));

    detail::parallel_for(static_cast<std::size_t>(replications),
                         detail::resolve_threads(cfg.threads), [&](std::size_t rep) {
        StandardWalker walk(cfg.dt, cfg.seed, rep);

        double y = walk.draw_stationary();
        bool entered = false;
        Target target{strat.a, y < strat.a};
        std::int64_t completed = 0;
        std::int64_t step = 0;
        std::int64_t last_event_step = 0;
        const auto on_touch = [&](double frac) {
            if ((static_cast<double>(step) + frac) * cfg.dt > horizon) return false;
            last_event_step = step;
            if (!entered) {
                entered = true;
                target = {strat.b, false};
            } else if (!target.from_below) {
                target = {strat.a, true};
            } else {
                ++completed;
                target = {strat.b, false};
            }
            return true;
        };
        for (; step < n_steps; ++step) {
            y = walk.advance(y, target, on_touch);
            if (step - last_event_step > cfg.max_steps_per_cycle) over_budget(cfg);
        }
        counts[rep] = completed;
    });
    return counts;
}

SimProfitEstimate estimate_profit_statistics(const CostedStrategy& cs, double horizon,
                                             std::int64_t replications, const SimConfig& cfg) {
    if (replications < 2) {
        throw DomainError("estimate_profit_statistics: need at least two replications");
    }
    if (cs.c < 0.0) throw DomainError("estimate_profit_statistics: cost must be non-negative");
    const std::vector<std::int64_t> counts =
        simulate_cycle_counts(cs.strategy, horizon, replications, cfg);

    const double profit = cycle_profit(cs);
    std::vector<double> profits(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        profits[i] = profit * static_cast<double>(counts[i]);
    }
    const SampleMoments m = sample_moments(profits);

    SimProfitEstimate out;
    out.mean_rate = m.mean / horizon;
    out.var_rate = m.variance / horizon;
    out.stderr_mean = m.stderr_mean / horizon;
    out.stderr_var = m.stderr_variance / horizon;
    out.replications = replications;
    out.horizon = horizon;
    out.short_horizon = horizon < 50.0 * expected_cycle_time(cs.strategy);
    return out;
}

}  // namespace oupairs
