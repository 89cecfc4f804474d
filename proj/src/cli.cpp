#include "oupairs/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "oupairs/cycle_stats.hpp"
#include "oupairs/errors.hpp"
#include "oupairs/ingest.hpp"
#include "oupairs/misspec.hpp"
#include "oupairs/optimizer.hpp"
#include "oupairs/ou_model.hpp"
#include "oupairs/simulator.hpp"
#include "oupairs/strategy_eval.hpp"
#include "oupairs/table.hpp"

namespace oupairs::cli {

namespace {

enum class Format { Csv, Json };

struct GeneralFlags {
    std::optional<double> mu;
    std::optional<double> tau;
    std::optional<double> sigma2;

    // All three or none.
    std::optional<OUParams> params() const {
        const int given = mu.has_value() + tau.has_value() + sigma2.has_value();
        if (given == 0) return std::nullopt;
        if (given != 3) throw DomainError("--mu, --tau and --sigma2 must be given together");
        OUParams p{*mu, *tau, *sigma2};
        p.validate();
        return p;
    }
};

// Range checks with plain messages; CLI11 prefixes the flag name.
std::string check_number(const std::string& text, bool allow_zero) {
    double v = 0.0;
    try {
        std::size_t used = 0;
        v = std::stod(text, &used);
        if (used != text.size()) return "expected a number, got '" + text + "'";
    } catch (const std::exception&) {
        return "expected a number, got '" + text + "'";
    }
    if (!std::isfinite(v)) return "must be finite, got " + text;
    if (allow_zero ? v < 0.0 : v <= 0.0) {
        return std::string(allow_zero ? "must be non-negative" : "must be positive") + ", got " +
               text;
    }
    return {};
}

const CLI::Validator kPositive(
    [](const std::string& s) { return check_number(s, false); }, "POSITIVE", "positive");
const CLI::Validator kNonNegative(
    [](const std::string& s) { return check_number(s, true); }, "NONNEGATIVE", "non_negative");

void add_general_flags(CLI::App& cmd, GeneralFlags& g) {
    cmd.add_option("--mu", g.mu, "long-term mean (general parametrization)");
    cmd.add_option("--tau", g.tau, "mean-reversion speed")->check(kPositive);
    cmd.add_option("--sigma2", g.sigma2, "squared volatility")->check(kPositive);
}

// Emits either a table or, for `estimate`, a JSON document.
struct Result {
    Table table;
    std::optional<nlohmann::ordered_json> document;
    std::vector<std::string> warnings;
    std::optional<std::string> numerical_failure;
};

std::string one_line(std::string s) {
    for (char& ch : s) {
        if (ch == '\n' || ch == '\r') ch = ' ';
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

struct OptimizeArgs {
    double cost = 0.0;
    std::optional<double> v0;
    double eps = kDefaultRiskEps;
    double tol = kDefaultArgTol;
    GeneralFlags general;
};

Result run_optimize(const OptimizeArgs& args) {
    const auto params = args.general.params();
    const double c = params ? standardize_cost(*params, args.cost) : args.cost;
    const OptResult r =
        args.v0 ? solve_risk_constrained(
                      c, {params ? standardize_variance_bound(*params, *args.v0) : *args.v0},
                      args.eps, args.tol)
                : maximize_unconstrained(c, args.tol);

    Result out;
    out.table.columns = {"a",           "b",        "profit_rate", "variance_rate",
                         "constraint_active", "residual"};
    std::vector<Cell> row = {r.strategy.a, r.strategy.b, r.performance.profit_rate,
                             r.performance.variance_rate, r.constraint_active, r.residual};
    if (params) {
        const GeneralStrategy gs = destandardize_strategy(*params, r.strategy);
        const GeneralPerformance gp = destandardize_performance(*params, r.performance);
        for (const char* col : {"cost_standardized", "a_general", "b_general",
                                "profit_rate_general", "variance_rate_general"}) {
            out.table.columns.emplace_back(col);
        }
        for (double v : {c, gs.a_tilde, gs.b_tilde, gp.profit_rate, gp.variance_rate}) {
            row.emplace_back(v);
        }
    }
    out.table.rows.push_back(std::move(row));
    if (r.monotonicity_anomaly) {
        out.numerical_failure =
            "variance rate is not increasing on [c/2, a*]; result comes from a grid scan";
    }
    return out;
}

struct FrontierArgs {
    double cost = 0.0;
    int points = 100;
    GeneralFlags general;
};

Result run_frontier(const FrontierArgs& args) {
    const auto params = args.general.params();
    const double c = params ? standardize_cost(*params, args.cost) : args.cost;
    const auto frontier = efficient_frontier(c, args.points);

    Result out;
    out.table.columns = {"a", "variance_rate", "profit_rate"};
    if (params) {
        for (const char* col :
             {"a_general", "b_general", "variance_rate_general", "profit_rate_general"}) {
            out.table.columns.emplace_back(col);
        }
    }
    for (const auto& p : frontier) {
        std::vector<Cell> row = {p.a, p.variance_rate, p.profit_rate};
        if (params) {
            const GeneralStrategy gs = destandardize_strategy(*params, {p.a, -p.a});
            const GeneralPerformance gp =
                destandardize_performance(*params, {p.profit_rate, p.variance_rate});
            for (double v : {gs.a_tilde, gs.b_tilde, gp.variance_rate, gp.profit_rate}) {
                row.emplace_back(v);
            }
        }
        out.table.rows.push_back(std::move(row));
    }
    return out;
}

struct MisspecArgs {
    OUParams truth{1.0, 10.0, 1e-4};
    std::optional<double> believed_mu;
    std::optional<double> believed_tau;
    std::optional<double> believed_sigma2;
    double cost_general = 0.0015;
    std::optional<double> v0_general;
    int points = 50;
    double eps = kDefaultRiskEps;
};

Result run_misspec(const MisspecArgs& args) {
    MisspecScenario s;
    s.true_params = args.truth;
    s.believed_params = {args.believed_mu.value_or(args.truth.mu),
                         args.believed_tau.value_or(args.truth.tau),
                         args.believed_sigma2.value_or(args.truth.sigma2)};
    s.true_params.validate();
    s.believed_params.validate();
    s.cost_general = args.cost_general;
    s.risk_bound_general = args.v0_general;

    Result out;
    out.table.columns = {"v0_general", "believed_V", "believed_Pi", "realized_V", "realized_Pi"};
    for (const auto& r : frontier_comparison(s, args.points, args.eps)) {
        out.table.rows.push_back(
            {r.v0_general, r.believed_V, r.believed_Pi, r.realized_V, r.realized_Pi});
    }
    return out;
}

struct SimulateArgs {
    double a = 0.0;
    double b = 0.0;
    double cost = 0.0;
    double horizon = 0.0;
    std::int64_t reps = 0;
    std::int64_t cycles = 0;
    SimConfig cfg;
};

Result run_simulate(const SimulateArgs& args) {
    const CostedStrategy cs{{args.a, args.b}, args.cost};
    const Performance analytic = evaluate(cs);
    const SimProfitEstimate sim = estimate_profit_statistics(cs, args.horizon, args.reps, args.cfg);

    Result out;
    out.table.columns = {"quantity", "analytic", "simulated", "stderr"};
    out.table.rows.push_back(
        {std::string("profit_rate"), analytic.profit_rate, sim.mean_rate, sim.stderr_mean});
    out.table.rows.push_back(
        {std::string("variance_rate"), analytic.variance_rate, sim.var_rate, sim.stderr_var});
    if (args.cycles > 0) {
        SimConfig cfg = args.cfg;
        cfg.n_cycles = args.cycles;
        const CycleStats st = cycle_stats(cs.strategy);
        const SimCycleEstimate est = estimate_cycle_stats(cs.strategy, cfg);
        out.table.rows.push_back({std::string("mean_t"), st.mean_t, est.mean_t, est.stderr_mean});
        out.table.rows.push_back({std::string("var_t"), st.var_t, est.var_t, est.stderr_var});
    }
    if (sim.short_horizon) {
        out.warnings.emplace_back("horizon is shorter than 50 expected cycle lengths; "
                                  "long-run estimates may be biased");
    }
    return out;
}

struct EstimateArgs {
    std::string input;
    std::optional<double> eta;
    bool fit_eta = false;
    bool log_prices = false;
};

Result run_estimate(const EstimateArgs& args) {
    const PricePairSeries series = load_csv(args.input);
    const double eta = args.eta ? *args.eta : estimate_eta(series, args.log_prices);
    const EstimatedParams est = estimate_ou(build_spread(series, eta, args.log_prices), eta);

    Result out;
    nlohmann::ordered_json doc;
    doc["mu"] = est.params.mu;
    doc["tau"] = est.params.tau;
    doc["sigma2"] = est.params.sigma2;
    doc["eta"] = est.eta;
    doc["n_obs"] = est.n_obs;
    doc["log_likelihood"] = est.log_likelihood;
    doc["std_errors"] = {{"mu", est.std_errors.mu},
                         {"tau", est.std_errors.tau},
                         {"sigma2", est.std_errors.sigma2}};
    out.document = std::move(doc);
    out.table.columns = {"mu",        "tau",       "sigma2",    "eta",
                         "n_obs",     "log_likelihood", "stderr_mu", "stderr_tau",
                         "stderr_sigma2"};
    out.table.rows.push_back({est.params.mu, est.params.tau, est.params.sigma2, est.eta,
                              est.n_obs, est.log_likelihood, est.std_errors.mu,
                              est.std_errors.tau, est.std_errors.sigma2});
    return out;
}

void emit(const Result& result, Format format, std::ostream& out) {
    if (format == Format::Json) {
        if (result.document) {
            out << result.document->dump(2) << '\n';
        } else {
            write_json(result.table, out);
        }
    } else {
        write_csv(result.table, out);
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Optimal and risk-bounded thresholds for OU pairs trading", "oupairs"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string output_path;
    std::string format_name;
    app.add_option("-o,--output", output_path, "write the table to this file instead of stdout");
    app.add_option("--format", format_name, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    OptimizeArgs opt;
    auto* optimize = app.add_subcommand("optimize", "optimal symmetric thresholds");
    optimize->add_option("--cost", opt.cost, "round-trip transaction cost")
        ->required()
        ->check(kPositive);
    optimize->add_option("--v0", opt.v0, "bound on the variance rate")->check(kPositive);
    optimize->add_option("--eps", opt.eps, "tolerance on |V - v0|")->check(kPositive);
    optimize->add_option("--tol", opt.tol, "tolerance on the entry level")
        ->check(kPositive);
    add_general_flags(*optimize, opt.general);

    FrontierArgs fr;
    auto* frontier = app.add_subcommand("frontier", "efficient frontier samples");
    frontier->add_option("--cost", fr.cost, "round-trip transaction cost")
        ->required()
        ->check(kPositive);
    frontier->add_option("--points", fr.points, "number of samples")->check(CLI::Range(2, 1000000));
    add_general_flags(*frontier, fr.general);

    MisspecArgs ms;
    auto* misspec = app.add_subcommand("misspec", "believed vs realized frontier");
    misspec->add_option("--true-mu", ms.truth.mu, "true long-term mean");
    misspec->add_option("--true-tau", ms.truth.tau, "true reversion speed")
        ->check(kPositive);
    misspec->add_option("--true-sigma2", ms.truth.sigma2, "true squared volatility")
        ->check(kPositive);
    misspec->add_option("--believed-mu", ms.believed_mu, "believed long-term mean");
    misspec->add_option("--believed-tau", ms.believed_tau, "believed reversion speed")
        ->check(kPositive);
    misspec->add_option("--believed-sigma2", ms.believed_sigma2, "believed squared volatility")
        ->check(kPositive);
    misspec->add_option("--cost-general", ms.cost_general, "transaction cost in price units")
        ->check(kPositive);
    misspec->add_option("--v0-general", ms.v0_general, "top of the variance-bound sweep")
        ->check(kPositive);
    misspec->add_option("--points", ms.points, "number of bounds in the sweep")
        ->check(CLI::Range(2, 1000000));
    misspec->add_option("--eps", ms.eps, "tolerance on |V - v0|")->check(kPositive);

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo check of Pi and V");
    simulate->add_option("--a", sim.a, "entry level")->required();
    simulate->add_option("--b", sim.b, "exit level")->required();
    simulate->add_option("--cost", sim.cost, "round-trip transaction cost")
        ->required()
        ->check(kNonNegative);
    simulate->add_option("--horizon", sim.horizon, "horizon in standardized time")
        ->required()
        ->check(kPositive);
    simulate->add_option("--reps", sim.reps, "independent replications")
        ->required()
        ->check(CLI::Range(std::int64_t{2}, std::numeric_limits<std::int64_t>::max()));
    simulate->add_option("--dt", sim.cfg.dt, "time step")->check(kPositive);
    simulate->add_option("--seed", sim.cfg.seed, "master seed");
    simulate->add_option("--cycles", sim.cycles, "also simulate this many cycles")
        ->check(kNonNegative);

    EstimateArgs est;
    auto* estimate = app.add_subcommand("estimate", "fit OU parameters to a price pair");
    estimate->add_option("--input", est.input, "CSV file with header s,A,B")
        ->required()
        ->check(CLI::ExistingFile);
    auto* eta_opt = estimate->add_option("--eta", est.eta, "cointegration coefficient");
    auto* fit_opt = estimate->add_flag("--fit-eta", est.fit_eta, "estimate eta by OLS (default)");
    eta_opt->excludes(fit_opt);
    estimate->add_flag("--log-prices", est.log_prices, "use log prices");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "oupairs: error: " << one_line(e.what()) << '\n';
        return kExitValidation;
    }

    Format format = Format::Csv;
    if (format_name == "json" || (format_name.empty() && estimate->parsed())) {
        format = Format::Json;
    }

    Result result;
    try {
        if (optimize->parsed()) {
            result = run_optimize(opt);
        } else if (frontier->parsed()) {
            result = run_frontier(fr);
        } else if (misspec->parsed()) {
            result = run_misspec(ms);
        } else if (simulate->parsed()) {
            result = run_simulate(sim);
        } else {
            result = run_estimate(est);
        }
    } catch (const NumericalError& e) {
        err << "oupairs: numerical failure: " << one_line(e.what()) << '\n';
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        err << "oupairs: error: " << one_line(e.what()) << '\n';
        return kExitValidation;
    } catch (const ParseError& e) {
        err << "oupairs: error: " << one_line(e.what()) << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "oupairs: numerical failure: " << one_line(e.what()) << '\n';
        return kExitNumerical;
    }

    for (const auto& w : result.warnings) err << "oupairs: warning: " << w << '\n';

    if (output_path.empty()) {
        emit(result, format, out);
    } else {
        std::ofstream file(output_path, std::ios::binary);
        if (!file) {
            err << "oupairs: error: cannot write '" << output_path << "'\n";
            return kExitValidation;
        }
        emit(result, format, file);
    }

    if (result.numerical_failure) {
        err << "oupairs: numerical failure: " << *result.numerical_failure << '\n';
        return kExitNumerical;
    }
    return kExitOk;
}

}  // namespace oupairs::cli
