#include "oracles.hpp"

#include <cmath>
#include <numbers>

#include "oupairs/strategy_eval.hpp"

namespace oupairs::oracle {

namespace {

using real = long double;

constexpr real kLower = -12.0L;  // stand-in for -infinity in the speed-measure integrals

// Trapezoid solution of the two backward equations on the node set
// [kLower, x0] u [x0, level], n intervals per segment.
PassageMoments passage_on_grid(double x0, double level, int n) {
    std::vector<real> z;
    z.reserve(2 * static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i) z.push_back(kLower + (x0 - kLower) * real(i) / n);
    for (int i = 0; i <= n; ++i) z.push_back(x0 + (level - x0) * real(i) / n);
    const std::size_t m = z.size();
    const std::size_t start = static_cast<std::size_t>(n);  // index of x0

    const real sqrt_half_pi = std::sqrt(std::numbers::pi_v<real> / 2.0L);
    // g(z) = e^{z^2/2} int_{-inf}^z e^{-u^2/2} du
    std::vector<real> g(m);
    for (std::size_t i = 0; i < m; ++i) {
        g[i] = std::exp(z[i] * z[i] / 2.0L) * sqrt_half_pi *
               std::erfc(-z[i] / std::numbers::sqrt2_v<real>);
    }
    // M1(z) = int_z^level g
    std::vector<real> m1(m, 0.0L);
    for (std::size_t i = m - 1; i-- > 0;) {
        m1[i] = m1[i + 1] + 0.5L * (z[i + 1] - z[i]) * (g[i] + g[i + 1]);
    }
    // H(z) = int_{-inf}^z e^{-u^2/2} M1(u) du
    std::vector<real> h(m, 0.0L);
    for (std::size_t i = 1; i < m; ++i) {
        const real f0 = std::exp(-z[i - 1] * z[i - 1] / 2.0L) * m1[i - 1];
        const real f1 = std::exp(-z[i] * z[i] / 2.0L) * m1[i];
        h[i] = h[i - 1] + 0.5L * (z[i] - z[i - 1]) * (f0 + f1);
    }
    // M2(x0) = 2 int_{x0}^level e^{z^2/2} H(z) dz
    real m2 = 0.0L;
    for (std::size_t i = start; i + 1 < m; ++i) {
        const real f0 = std::exp(z[i] * z[i] / 2.0L) * h[i];
        const real f1 = std::exp(z[i + 1] * z[i + 1] / 2.0L) * h[i + 1];
        m2 += 0.5L * (z[i + 1] - z[i]) * (f0 + f1);
    }
    m2 *= 2.0L;
    const real mean = m1[start];
    return {static_cast<double>(mean), static_cast<double>(m2 - mean * mean)};
}

}  // namespace

PassageMoments upward_passage(double x0, double level) {
    // Richardson extrapolation of the O(h^2) trapezoid results.
    constexpr int n = 200000;
    const PassageMoments coarse = passage_on_grid(x0, level, n);
    const PassageMoments fine = passage_on_grid(x0, level, 2 * n);
    return {(4.0 * fine.mean - coarse.mean) / 3.0,
            (4.0 * fine.variance - coarse.variance) / 3.0};
}

CycleStats cycle_by_quadrature(const Strategy& s) {
    const PassageMoments up = upward_passage(s.b, s.a);
    const PassageMoments down = upward_passage(-s.a, -s.b);
    return {up.mean + down.mean, up.variance + down.variance};
}

long double gamma_half_integer(int n) {
    long double g = std::sqrt(std::numbers::pi_v<long double>);
    for (int k = 0; k < n; ++k) g *= (k + 0.5L);
    return g;
}

double expected_cycle_time_direct(const Strategy& s) {
    const real xa = std::numbers::sqrt2_v<real> * s.a;
    const real xb = std::numbers::sqrt2_v<real> * s.b;
    real sum = 0.0L;
    for (int k = 1; k <= 150; ++k) {
        const int p = 2 * k - 1;
        const real gamma = gamma_half_integer(k - 1);  // Gamma(k - 1/2)
        real fact = 1.0L;
        for (int i = 2; i <= p; ++i) fact *= i;
        sum += gamma * (std::pow(xa, p) - std::pow(xb, p)) / fact;
    }
    return static_cast<double>(sum);
}

OUParams ar1_closed_form(const std::vector<double>& x, double dt) {
    const std::size_t n = x.size() - 1;
    real sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += x[i + 1];
        sxx += real(x[i]) * x[i];
        sxy += real(x[i]) * x[i + 1];
    }
    const real nn = static_cast<real>(n);
    const real beta = (nn * sxy - sx * sy) / (nn * sxx - sx * sx);
    const real alpha = (sy - beta * sx) / nn;
    real ss = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const real r = x[i + 1] - alpha - beta * x[i];
        ss += r * r;
    }
    const real s2 = ss / nn;
    const real tau = -std::log(beta) / dt;
    return {static_cast<double>(alpha / (1.0L - beta)), static_cast<double>(tau),
            static_cast<double>(2.0L * tau * s2 / (1.0L - beta * beta))};
}

double grid_argmax_symmetric(double c, double lo, double hi, double step) {
    double best_a = lo;
    double best = -1e300;
    const auto n = static_cast<long>(std::floor((hi - lo) / step + 0.5));
    for (long i = 0; i <= n; ++i) {
        const double a = lo + step * static_cast<double>(i);
        if (!(a > -a)) continue;
        const double pi = expected_profit_rate({{a, -a}, c});
        if (pi > best) {
            best = pi;
            best_a = a;
        }
    }
    return best_a;
}

}  // namespace oupairs::oracle
