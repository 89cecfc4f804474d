#include "oupairs/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "oupairs/errors.hpp"

namespace oupairs::specfun {

namespace {

void require_positive(double x, const char* fn) {
    if (!std::isfinite(x) || x <= 0.0) {
        throw DomainError(std::string(fn) + ": argument must be positive and finite, got " +
                          std::to_string(x));
    }
}

// zeta(k) - 1 for k = 2..33; coefficients of the Taylor series of ln Gamma about 2.
constexpr std::array<double, 32> kZetaMinusOne = {
    6.44934066848226406e-01, 2.02056903159594292e-01, 8.23232337111381857e-02,
    3.69277551433699266e-02, 1.73430619844491402e-02, 8.34927738192282713e-03,
    4.07735619794433960e-03, 2.00839282608221426e-03, 9.94575127818085256e-04,
    4.94188604119464529e-04, 2.46086553308048320e-04, 1.22713347578489145e-04,
    6.12481350587048277e-05, 3.05882363070204933e-05, 1.52822594086518710e-05,
    7.63719763789976257e-06, 3.81729326499984022e-06, 1.90821271655393897e-06,
    9.53962033872796212e-07, 4.76932986787806447e-07, 2.38450502727733004e-07,
    1.19219925965311064e-07, 5.96081890512594801e-08, 2.98035035146522793e-08,
    1.49015548283650427e-08, 7.45071178983543006e-09, 3.72533402478845728e-09,
    1.86265972351304914e-09, 9.31327432419668166e-10, 4.65662906503378366e-10,
    2.32831183367650534e-10, 1.16415501727005193e-10,
};

// ln Gamma(2 + z) for |z| <= 0.5:
//   (1 - gamma) z + sum_{k>=2} (-1)^k (zeta(k) - 1) z^k / k
double log_gamma_near_two(double z) {
    double sum = 0.0;
    double zk = z;
    std::array<double, kZetaMinusOne.size()> terms{};
    for (std::size_t i = 0; i < kZetaMinusOne.size(); ++i) {
        zk *= z;
        const int k = static_cast<int>(i) + 2;
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        terms[i] = sign * kZetaMinusOne[i] * zk / k;
    }
    // smallest terms first
    for (std::size_t i = terms.size(); i-- > 0;) sum += terms[i];
    return sum + (1.0 - euler_gamma) * z;
}

// Stirling series, x >= 10.
double log_gamma_stirling(double x) {
    constexpr double half_log_two_pi = 0.91893853320467274178032973640562;
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // Bernoulli coefficients B_{2k} / (2k (2k - 1)).
    const double series =
        inv * (1.0 / 12.0 +
               inv2 * (-1.0 / 360.0 +
                       inv2 * (1.0 / 1260.0 +
                               inv2 * (-1.0 / 1680.0 +
                                       inv2 * (1.0 / 1188.0 +
                                               inv2 * (-691.0 / 360360.0 +
                                                       inv2 * (1.0 / 156.0)))))));
    return (x - 0.5) * std::log(x) - x + half_log_two_pi + series;
}

}  // namespace

double log_gamma(double x) {
    require_positive(x, "log_gamma");
    if (x >= 10.0) return log_gamma_stirling(x);
    if (x >= 2.5) {
        // Walk down into [1.5, 2.5); every log term is positive.
        double acc = 0.0;
        while (x >= 2.5) {
            x -= 1.0;
            acc += std::log(x);
        }
        return acc + log_gamma_near_two(x - 2.0);
    }
    if (x >= 1.5) return log_gamma_near_two(x - 2.0);
    if (x >= 0.5) return log_gamma_near_two(x - 1.0) - std::log1p(x - 1.0);
    // (0, 0.5): Gamma(x) = Gamma(x + 2) / (x (x + 1)).
    return log_gamma_near_two(x) - std::log1p(x) - std::log(x);
}

double digamma(double x) {
    require_positive(x, "digamma");
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // psi(x) ~ ln x - 1/(2x) - sum B_{2k} / (2k x^{2k})
    const double series =
        inv2 * (1.0 / 12.0 -
                inv2 * (1.0 / 120.0 -
                        inv2 * (1.0 / 252.0 -
                                inv2 * (1.0 / 240.0 -
                                        inv2 * (1.0 / 132.0 -
                                                inv2 * (691.0 / 32760.0 - inv2 / 12.0))))));
    return acc + std::log(x) - 0.5 * inv - series;
}

double digamma_half_integer(int n) {
    if (n < 0) throw DomainError("digamma_half_integer: n must be >= 0");
    double sum = 0.0;
    for (int k = 1; k <= n; ++k) sum += 1.0 / (2.0 * k - 1.0);
    return -euler_gamma - 2.0 * std::numbers::ln2 + 2.0 * sum;
}

}  // namespace oupairs::specfun
