#include "oupairs/misspec.hpp"

#include <cmath>

#include "oupairs/errors.hpp"
#include "oupairs/ou_model.hpp"
#include "oupairs/strategy_eval.hpp"

namespace oupairs {

namespace {

OptResult solve_in_frame(const OUParams& p, double cost_general, std::optional<double> v0_general,
                         double eps) {
    const double c = standardize_cost(p, cost_general);
    if (!v0_general) return maximize_unconstrained(c);
    return solve_risk_constrained(c, {standardize_variance_bound(p, *v0_general)}, eps);
}

}  // namespace

MisspecOutcome analyze(const MisspecScenario& scenario, double eps) {
    const OUParams& truth = scenario.true_params;
    const OUParams& belief = scenario.believed_params;
    truth.validate();
    belief.validate();
    if (!std::isfinite(scenario.cost_general) || !(scenario.cost_general > 0.0)) {
        throw DomainError("analyze: general cost must be positive and finite");
    }

    const OptResult believed =
        solve_in_frame(belief, scenario.cost_general, scenario.risk_bound_general, eps);

    MisspecOutcome out;
    out.constraint_active = believed.constraint_active;
    out.believed_standardized = believed.strategy;
    out.believed_strategy = destandardize_strategy(belief, believed.strategy);
    out.believed_perf = destandardize_performance(belief, believed.performance);

    out.realized_standardized = standardize_strategy(truth, out.believed_strategy);
    if (!(out.realized_standardized.a > out.realized_standardized.b)) {
        throw DomainError("analyze: traded levels are not ordered under the true parameters");
    }
    const double c_true = standardize_cost(truth, scenario.cost_general);
    out.realized_perf =
        destandardize_performance(truth, evaluate({out.realized_standardized, c_true}));
    out.realized_feasible = !scenario.risk_bound_general ||
                            out.realized_perf.variance_rate <= *scenario.risk_bound_general;
    return out;
}

std::vector<FrontierComparisonRow> frontier_comparison(const MisspecScenario& scenario,
                                                       int n_points, double eps) {
    if (n_points < 2) throw DomainError("frontier_comparison: n_points must be at least 2");

    double top = 0.0;
    if (scenario.risk_bound_general) {
        top = *scenario.risk_bound_general;
        if (!std::isfinite(top) || !(top > 0.0)) {
            throw DomainError("frontier_comparison: v0 must be positive and finite");
        }
    } else {
        MisspecScenario unbounded = scenario;
        unbounded.risk_bound_general.reset();
        top = analyze(unbounded, eps).believed_perf.variance_rate;
    }

    std::vector<FrontierComparisonRow> rows;
    rows.reserve(static_cast<std::size_t>(n_points));
    for (int i = 1; i <= n_points; ++i) {
        MisspecScenario s = scenario;
        s.risk_bound_general = top * i / n_points;
        const MisspecOutcome o = analyze(s, eps);
        rows.push_back({*s.risk_bound_general, o.believed_perf.variance_rate,
                        o.believed_perf.profit_rate, o.realized_perf.variance_rate,
                        o.realized_perf.profit_rate});
    }
    return rows;
}

std::vector<MisspecScenario> default_misspec_grid(const OUParams& truth, double cost_general,
                                                  std::optional<double> risk_bound_general) {
    truth.validate();
    const double mu_shift = 5.0 * std::sqrt(truth.stationary_variance());
    std::vector<MisspecScenario> grid;
    const auto add = [&](OUParams believed) {
        grid.push_back({truth, believed, cost_general, risk_bound_general});
    };
    for (double sign : {-1.0, 1.0}) {
        OUParams p = truth;
        p.mu += sign * mu_shift;
        add(p);
    }
    for (double factor : {0.5, 1.5}) {
        OUParams p = truth;
        p.tau *= factor;
        add(p);
    }
    for (double factor : {0.5, 1.5}) {
        OUParams p = truth;
        p.sigma2 *= factor;
        add(p);
    }
    return grid;
}

}  // namespace oupairs
