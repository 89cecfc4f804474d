#ifndef OUPAIRS_STATS_HPP
#define OUPAIRS_STATS_HPP

#include <cstdint>
#include <span>

namespace oupairs {

/// Pairwise (cascade) summation; result depends only on the input order.
double pairwise_sum(std::span<const double> xs);

/// Sample mean, unbiased variance, and the standard errors of both.
struct SampleMoments {
    std::int64_t n = 0;
    double mean = 0.0;
    double variance = 0.0;
    double stderr_mean = 0.0;
    double stderr_variance = 0.0;  ///< sqrt((m4 - m2^2) / n), central moments m2, m4
};

/// Requires at least two samples.
SampleMoments sample_moments(std::span<const double> xs);

}  // namespace oupairs

#endif  // OUPAIRS_STATS_HPP
