#include "oupairs/ou_model.hpp"

#include <cmath>
#include <string>

#include "oupairs/errors.hpp"

namespace oupairs {

void OUParams::validate() const {
    if (!std::isfinite(mu) || !std::isfinite(tau) || !std::isfinite(sigma2)) {
        throw DomainError("OUParams: all parameters must be finite");
    }
    if (tau <= 0.0) throw DomainError("OUParams: tau must be positive, got " + std::to_string(tau));
    if (sigma2 <= 0.0) {
        throw DomainError("OUParams: sigma2 must be positive, got " + std::to_string(sigma2));
    }
}

void PairSpec::validate() const {
    if (!std::isfinite(eta) || !std::isfinite(cost_a) || !std::isfinite(cost_b)) {
        throw DomainError("PairSpec: all fields must be finite");
    }
    if (cost_a < 0.0 || cost_b < 0.0) throw DomainError("PairSpec: costs must be non-negative");
}

namespace {

// sqrt(2 tau / sigma^2): price units -> standardized units.
double scale(const OUParams& p) {
    p.validate();
    return std::sqrt(2.0 * p.tau / p.sigma2);
}

}  // namespace

double combined_cost(const PairSpec& spec) {
    spec.validate();
    return 2.0 * spec.cost_a + 2.0 * spec.eta * spec.cost_b;
}

double standardize_cost(const OUParams& p, double c_tilde) {
    if (!(c_tilde >= 0.0) || !std::isfinite(c_tilde)) {
        throw DomainError("standardize_cost: cost must be non-negative and finite");
    }
    return scale(p) * c_tilde;
}

double destandardize_cost(const OUParams& p, double c) {
    if (!(c >= 0.0) || !std::isfinite(c)) {
        throw DomainError("destandardize_cost: cost must be non-negative and finite");
    }
    return c / scale(p);
}

double standardize_variance_bound(const OUParams& p, double v0_tilde) {
    p.validate();
    if (!(v0_tilde > 0.0) || !std::isfinite(v0_tilde)) {
        throw DomainError("standardize_variance_bound: bound must be positive and finite");
    }
    return 2.0 * v0_tilde / p.sigma2;
}

StandardPoint standardize_point(const OUParams& p, double x, double s) {
    return {scale(p) * (x - p.mu), p.tau * s};
}

GeneralPoint destandardize_point(const OUParams& p, double y, double t) {
    return {y / scale(p) + p.mu, t / p.tau};
}

GeneralStrategy destandardize_strategy(const OUParams& p, const Strategy& strat) {
    const double k = 1.0 / scale(p);
    return {k * strat.a + p.mu, k * strat.b + p.mu};
}

Strategy standardize_strategy(const OUParams& p, const GeneralStrategy& strat) {
    const double k = scale(p);
    return {k * (strat.a_tilde - p.mu), k * (strat.b_tilde - p.mu)};
}

GeneralPerformance destandardize_performance(const OUParams& p, const Performance& perf) {
    p.validate();
    return {std::sqrt(p.tau * p.sigma2 / 2.0) * perf.profit_rate,
            p.sigma2 / 2.0 * perf.variance_rate};
}

Transition transition(const OUParams& p, double x0, double dt) {
    p.validate();
    if (!(dt > 0.0)) throw DomainError("transition: dt must be positive");
    const double decay = std::exp(-p.tau * dt);
    // 1 - e^{-2 tau dt} without cancellation for small steps
    const double spread = -std::expm1(-2.0 * p.tau * dt);
    return {p.mu + (x0 - p.mu) * decay, p.stationary_variance() * spread};
}

}  // namespace oupairs
