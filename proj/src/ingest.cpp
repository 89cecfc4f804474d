#include "oupairs/ingest.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <string_view>

#include "oupairs/errors.hpp"
#include "oupairs/stats.hpp"

namespace oupairs {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_cell(std::string_view cell, std::size_t line, const char* column) {
    cell = trim(cell);
    if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size() ||
        !std::isfinite(value)) {
        throw ParseError("line " + std::to_string(line) + ": column " + column +
                             ": not a number: '" + std::string(cell) + "'",
                         line);
    }
    return value;
}

// Fixed-tau profile: closed-form mu and sigma2, plus the score in tau.
struct Profile {
    double mu = 0.0;
    double sigma2 = 0.0;
    double score = 0.0;
};

Profile profile_at(const SpreadSeries& sp, double tau) {
    const std::size_t n = sp.values.size() - 1;
    std::vector<double> num(n);
    std::vector<double> den(n);
    std::vector<double> beta(n);
    std::vector<double> one_minus_b2(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double dt = sp.times[i + 1] - sp.times[i];
        beta[i] = std::exp(-tau * dt);
        one_minus_b2[i] = -std::expm1(-2.0 * tau * dt);
        const double w = 1.0 / one_minus_b2[i];
        const double one_minus_b = -std::expm1(-tau * dt);
        num[i] = w * one_minus_b * (sp.values[i + 1] - beta[i] * sp.values[i]);
        den[i] = w * one_minus_b * one_minus_b;
    }
    Profile p;
    p.mu = pairwise_sum(num) / pairwise_sum(den);

    std::vector<double> scaled_sq(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = sp.values[i + 1] - p.mu - (sp.values[i] - p.mu) * beta[i];
        scaled_sq[i] = r * r / one_minus_b2[i];
    }
    p.sigma2 = 2.0 * tau * pairwise_sum(scaled_sq) / static_cast<double>(n);

    // d/dtau of the log-likelihood at (mu, tau, sigma2); by the envelope
    // theorem this is the derivative of the profile.
    std::vector<double> terms(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double dt = sp.times[i + 1] - sp.times[i];
        const double v = p.sigma2 / (2.0 * tau) * one_minus_b2[i];
        const double lag = sp.values[i] - p.mu;
        const double r = sp.values[i + 1] - p.mu - lag * beta[i];
        const double dr = dt * beta[i] * lag;
        const double dlogv = -1.0 / tau + 2.0 * dt * beta[i] * beta[i] / one_minus_b2[i];
        terms[i] = dlogv * 0.5 * (r * r / v - 1.0) - r * dr / v;
    }
    p.score = pairwise_sum(terms);
    return p;
}

// Analytic gradient of the log-likelihood in (mu, tau, sigma2).
std::array<double, 3> gradient(const SpreadSeries& sp, const OUParams& q) {
    const std::size_t n = sp.values.size() - 1;
    std::vector<double> g_mu(n);
    std::vector<double> g_tau(n);
    std::vector<double> g_s2(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double dt = sp.times[i + 1] - sp.times[i];
        const double beta = std::exp(-q.tau * dt);
        const double omb2 = -std::expm1(-2.0 * q.tau * dt);
        const double v = q.sigma2 / (2.0 * q.tau) * omb2;
        const double lag = sp.values[i] - q.mu;
        const double r = sp.values[i + 1] - q.mu - lag * beta;
        const double half_excess = 0.5 * (r * r / v - 1.0);
        g_mu[i] = r * (1.0 - beta) / v;
        const double dlogv = -1.0 / q.tau + 2.0 * dt * beta * beta / omb2;
        g_tau[i] = dlogv * half_excess - r * (dt * beta * lag) / v;
        g_s2[i] = half_excess / q.sigma2;
    }
    return {pairwise_sum(g_mu), pairwise_sum(g_tau), pairwise_sum(g_s2)};
}

// Standard errors from the inverse of the central-difference Hessian of the
// analytic gradient.
OUParams standard_errors(const SpreadSeries& sp, const OUParams& at) {
    std::array<std::array<double, 3>, 3> h{};
    const std::array<double, 3> base = {at.mu, at.tau, at.sigma2};
    const std::array<double, 3> steps = {1e-5 * std::sqrt(at.stationary_variance()),
                                         1e-5 * at.tau, 1e-5 * at.sigma2};
    for (int j = 0; j < 3; ++j) {
        auto plus = base;
        auto minus = base;
        plus[j] += steps[j];
        minus[j] -= steps[j];
        const auto gp = gradient(sp, {plus[0], plus[1], plus[2]});
        const auto gm = gradient(sp, {minus[0], minus[1], minus[2]});
        for (int i = 0; i < 3; ++i) h[i][j] = (gp[i] - gm[i]) / (2.0 * steps[j]);
    }
    // symmetrize, then invert the observed information -H
    std::array<std::array<double, 3>, 3> info{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) info[i][j] = -0.5 * (h[i][j] + h[j][i]);
    }
    const auto& m = info;
    const double c00 = m[1][1] * m[2][2] - m[1][2] * m[2][1];
    const double c11 = m[0][0] * m[2][2] - m[0][2] * m[2][0];
    const double c22 = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    const double det = m[0][0] * c00 - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (!(det > 0.0) || !std::isfinite(det)) {
        throw NumericalError("estimate_ou: observed information is not positive definite");
    }
    return {std::sqrt(c00 / det), std::sqrt(c11 / det), std::sqrt(c22 / det)};
}

}  // namespace

void PricePairSeries::validate() const {
    const std::size_t n = timestamps.size();
    if (prices_a.size() != n || prices_b.size() != n) {
        throw DomainError("PricePairSeries: columns have different lengths");
    }
    if (n < 3) throw DomainError("PricePairSeries: need at least 3 observations");
    for (std::size_t i = 1; i < n; ++i) {
        if (!(timestamps[i] > timestamps[i - 1])) {
            throw DomainError("PricePairSeries: timestamps not strictly increasing at row " +
                              std::to_string(i + 1));
        }
    }
}

PricePairSeries parse_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw ParseError("empty input, expected header 's,A,B'", 1);
    ++line_no;
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
    {
        std::string header;
        for (char ch : line) {
            if (ch != ' ' && ch != '\t' && ch != '\r') header.push_back(ch);
        }
        if (header != "s,A,B") {
            throw ParseError("line 1: expected header 's,A,B', got '" + line + "'", 1);
        }
    }

    PricePairSeries out;
    constexpr std::array<const char*, 3> kColumns = {"s", "A", "B"};
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        std::array<double, 3> row{};
        std::string_view rest = line;
        for (std::size_t col = 0; col < 3; ++col) {
            const auto comma = rest.find(',');
            const bool last = col == 2;
            if (last != (comma == std::string_view::npos)) {
                throw ParseError("line " + std::to_string(line_no) + ": expected 3 fields",
                                 line_no);
            }
            row[col] = parse_cell(rest.substr(0, comma), line_no, kColumns[col]);
            if (!last) rest.remove_prefix(comma + 1);
        }
        if (!out.timestamps.empty() && !(row[0] > out.timestamps.back())) {
            throw DomainError("line " + std::to_string(line_no) +
                              ": timestamps must be strictly increasing");
        }
        out.timestamps.push_back(row[0]);
        out.prices_a.push_back(row[1]);
        out.prices_b.push_back(row[2]);
    }
    if (out.timestamps.size() < 3) {
        throw DomainError("need at least 3 observations, got " +
                          std::to_string(out.timestamps.size()));
    }
    return out;
}

PricePairSeries load_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open '" + path.string() + "'");
    return parse_csv(in);
}

SpreadSeries build_spread(const PricePairSeries& series, double eta, bool log_prices) {
    series.validate();
    if (!std::isfinite(eta)) throw DomainError("build_spread: eta must be finite");
    SpreadSeries out;
    out.times = series.timestamps;
    out.values.resize(series.timestamps.size());
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        double a = series.prices_a[i];
        double b = series.prices_b[i];
        if (log_prices) {
            if (!(a > 0.0) || !(b > 0.0)) {
                throw DomainError("build_spread: non-positive price at row " +
                                  std::to_string(i + 1) + " with log prices");
            }
            a = std::log(a);
            b = std::log(b);
        }
        out.values[i] = a - eta * b;
    }
    return out;
}

double estimate_eta(const PricePairSeries& series, bool log_prices) {
    series.validate();
    const std::size_t n = series.timestamps.size();
    std::vector<double> a(n);
    std::vector<double> b(n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i] = series.prices_a[i];
        b[i] = series.prices_b[i];
        if (log_prices) {
            if (!(a[i] > 0.0) || !(b[i] > 0.0)) {
                throw DomainError("estimate_eta: non-positive price at row " +
                                  std::to_string(i + 1) + " with log prices");
            }
            a[i] = std::log(a[i]);
            b[i] = std::log(b[i]);
        }
    }
    const double mean_a = pairwise_sum(a) / static_cast<double>(n);
    const double mean_b = pairwise_sum(b) / static_cast<double>(n);
    std::vector<double> sxy(n);
    std::vector<double> sxx(n);
    for (std::size_t i = 0; i < n; ++i) {
        sxy[i] = (b[i] - mean_b) * (a[i] - mean_a);
        sxx[i] = (b[i] - mean_b) * (b[i] - mean_b);
    }
    const double var_b = pairwise_sum(sxx);
    if (!(var_b > 0.0)) throw DegenerateError("estimate_eta: B has zero variance");
    return pairwise_sum(sxy) / var_b;
}

double ou_log_likelihood(const SpreadSeries& spread, const OUParams& q) {
    q.validate();
    const std::size_t n = spread.values.size() - 1;
    std::vector<double> terms(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double dt = spread.times[i + 1] - spread.times[i];
        const double beta = std::exp(-q.tau * dt);
        const double v = q.stationary_variance() * -std::expm1(-2.0 * q.tau * dt);
        const double r = spread.values[i + 1] - q.mu - (spread.values[i] - q.mu) * beta;
        terms[i] = -0.5 * (std::log(2.0 * std::numbers::pi * v) + r * r / v);
    }
    return pairwise_sum(terms);
}

EstimatedParams estimate_ou(const SpreadSeries& spread, double eta) {
    const std::size_t n = spread.values.size();
    if (spread.times.size() != n) throw DomainError("estimate_ou: times and values differ in length");
    if (n < 3) throw DomainError("estimate_ou: need at least 3 observations");
    for (std::size_t i = 1; i < n; ++i) {
        if (!(spread.times[i] > spread.times[i - 1])) {
            throw DomainError("estimate_ou: times must be strictly increasing");
        }
    }
    const SampleMoments m = sample_moments(spread.values);
    if (!(m.variance > 0.0)) throw DegenerateError("estimate_ou: spread has zero variance");

    // Starting point from the lag-1 autocorrelation at the mean spacing.
    const double mean_dt = (spread.times.back() - spread.times.front()) / static_cast<double>(n - 1);
    std::vector<double> lagged(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        lagged[i] = (spread.values[i] - m.mean) * (spread.values[i + 1] - m.mean);
    }
    const double rho = pairwise_sum(lagged) / (static_cast<double>(n - 1) * m.variance);
    const double tau0 = (rho > 0.0 && rho < 1.0) ? -std::log(rho) / mean_dt : 1.0 / mean_dt;

    // Bracket a sign change of the profiled score: positive below the root.
    double lo = tau0;
    double hi = tau0;
    int expansions = 0;
    while (profile_at(spread, lo).score <= 0.0) {
        lo *= 0.5;
        if (++expansions > 200) throw ConvergenceError("estimate_ou: cannot bracket tau from below");
    }
    expansions = 0;
    while (profile_at(spread, hi).score >= 0.0) {
        hi *= 2.0;
        if (++expansions > 200) {
            throw ConvergenceError("estimate_ou: likelihood increases without bound in tau");
        }
    }

    for (int it = 0; it < 300; ++it) {
        const double mid = std::sqrt(lo * hi);
        if (!(mid > lo && mid < hi)) break;
        if (profile_at(spread, mid).score > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double tau = std::sqrt(lo * hi);
    const Profile p = profile_at(spread, tau);

    EstimatedParams out;
    out.params = {p.mu, tau, p.sigma2};
    out.params.validate();
    out.eta = eta;
    out.n_obs = static_cast<std::int64_t>(n);
    out.log_likelihood = ou_log_likelihood(spread, out.params);
    out.std_errors = standard_errors(spread, out.params);
    return out;
}

}  // namespace oupairs
