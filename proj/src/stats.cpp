#include "oupairs/stats.hpp"

#include <cmath>
#include <vector>

#include "oupairs/errors.hpp"

namespace oupairs {

double pairwise_sum(std::span<const double> xs) {
    constexpr std::size_t kLeaf = 64;
    if (xs.size() <= kLeaf) {
        double s = 0.0;
        for (double x : xs) s += x;
        return s;
    }
    const std::size_t half = xs.size() / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

SampleMoments sample_moments(std::span<const double> xs) {
    if (xs.size() < 2) throw DomainError("sample_moments: need at least two samples");
    const auto n = static_cast<double>(xs.size());
    const double mean = pairwise_sum(xs) / n;

    std::vector<double> sq(xs.size());
    std::vector<double> quad(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double d = xs[i] - mean;
        sq[i] = d * d;
        quad[i] = sq[i] * sq[i];
    }
    const double m2 = pairwise_sum(sq) / n;
    const double m4 = pairwise_sum(quad) / n;

    SampleMoments out;
    out.n = static_cast<std::int64_t>(xs.size());
    out.mean = mean;
    out.variance = m2 * n / (n - 1.0);
    out.stderr_mean = std::sqrt(out.variance / n);
    out.stderr_variance = std::sqrt(std::max(0.0, m4 - m2 * m2) / n);
    return out;
}

}  // namespace oupairs
