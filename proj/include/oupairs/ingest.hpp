#ifndef OUPAIRS_INGEST_HPP
#define OUPAIRS_INGEST_HPP

/**
 * @file ingest.hpp
 * @brief Paired price data, spread construction and OU estimation.
 *
 * CSV input has the header `s,A,B` (time, price of A, price of B), comma
 * separated, with strictly increasing times and at least three rows.
 */

#include <cstdint>
#include <filesystem>
#include <istream>
#include <vector>

#include "oupairs/types.hpp"

namespace oupairs {

struct PricePairSeries {
    std::vector<double> timestamps;
    std::vector<double> prices_a;
    std::vector<double> prices_b;

    void validate() const;
};

struct SpreadSeries {
    std::vector<double> times;
    std::vector<double> values;
};

struct EstimatedParams {
    OUParams params;
    double eta = 1.0;
    std::int64_t n_obs = 0;
    double log_likelihood = 0.0;
    OUParams std_errors;  ///< asymptotic standard errors of mu, tau, sigma2
};

PricePairSeries load_csv(const std::filesystem::path& path);
PricePairSeries parse_csv(std::istream& in);

/// x_i = A_i - eta B_i, or ln A_i - eta ln B_i with log_prices.
SpreadSeries build_spread(const PricePairSeries& series, double eta, bool log_prices);

/// OLS slope of A on B (or of ln A on ln B).
double estimate_eta(const PricePairSeries& series, bool log_prices);

/**
 * @brief Log-likelihood of consecutive observations under the exact transition.
 *
 * Conditional on the first observation; spacing may be irregular.
 */
double ou_log_likelihood(const SpreadSeries& spread, const OUParams& params);

/**
 * @brief Maximum-likelihood OU fit.
 *
 * For fixed tau the likelihood is maximized in closed form by a weighted
 * least-squares mean and a residual variance. The profiled score in tau is
 * then driven to zero by bisection in log tau. Standard errors come from the
 * inverse observed information.
 */
EstimatedParams estimate_ou(const SpreadSeries& spread, double eta = 1.0);

}  // namespace oupairs

#endif  // OUPAIRS_INGEST_HPP
