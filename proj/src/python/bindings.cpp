#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oupairs/cycle_stats.hpp"
#include "oupairs/errors.hpp"
#include "oupairs/ingest.hpp"
#include "oupairs/misspec.hpp"
#include "oupairs/optimizer.hpp"
#include "oupairs/ou_model.hpp"
#include "oupairs/simulator.hpp"
#include "oupairs/specfun.hpp"
#include "oupairs/strategy_eval.hpp"

namespace py = pybind11;
using namespace oupairs;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Optimal mean-reversion trading thresholds for OU spreads";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    auto numerical_error =
        py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", numerical_error.ptr());
    py::register_exception<DegenerateError>(m, "DegenerateError", numerical_error.ptr());
    py::register_exception<BudgetError>(m, "BudgetError", numerical_error.ptr());

    py::class_<OUParams>(m, "OUParams")
        .def(py::init<>())
        .def(py::init([](double mu, double tau, double sigma2) {
                 OUParams p{mu, tau, sigma2};
                 p.validate();
                 return p;
             }),
             py::arg("mu"), py::arg("tau"), py::arg("sigma2"))
        .def_readwrite("mu", &OUParams::mu)
        .def_readwrite("tau", &OUParams::tau)
        .def_readwrite("sigma2", &OUParams::sigma2)
        .def("stationary_variance", &OUParams::stationary_variance)
        .def("__repr__", [](const OUParams& p) {
            return "OUParams(mu=" + std::to_string(p.mu) + ", tau=" + std::to_string(p.tau) +
                   ", sigma2=" + std::to_string(p.sigma2) + ")";
        });

    py::class_<Strategy>(m, "Strategy")
        .def(py::init<double, double>(), py::arg("a"), py::arg("b"))
        .def_readwrite("a", &Strategy::a)
        .def_readwrite("b", &Strategy::b);

    py::class_<CycleStats>(m, "CycleStats")
        .def_readonly("mean_t", &CycleStats::mean_t)
        .def_readonly("var_t", &CycleStats::var_t);

    py::class_<Performance>(m, "Performance")
        .def_readonly("profit_rate", &Performance::profit_rate)
        .def_readonly("variance_rate", &Performance::variance_rate);

    py::class_<GeneralStrategy>(m, "GeneralStrategy")
        .def_readonly("a_tilde", &GeneralStrategy::a_tilde)
        .def_readonly("b_tilde", &GeneralStrategy::b_tilde);

    py::class_<GeneralPerformance>(m, "GeneralPerformance")
        .def_readonly("profit_rate", &GeneralPerformance::profit_rate)
        .def_readonly("variance_rate", &GeneralPerformance::variance_rate);

    py::class_<OptResult>(m, "OptResult")
        .def_readonly("strategy", &OptResult::strategy)
        .def_readonly("performance", &OptResult::performance)
        .def_readonly("constraint_active", &OptResult::constraint_active)
        .def_readonly("residual", &OptResult::residual)
        .def_readonly("monotonicity_anomaly", &OptResult::monotonicity_anomaly)
        .def_readonly("iterations", &OptResult::iterations);

    py::class_<FrontierPoint>(m, "FrontierPoint")
        .def_readonly("a", &FrontierPoint::a)
        .def_readonly("variance_rate", &FrontierPoint::variance_rate)
        .def_readonly("profit_rate", &FrontierPoint::profit_rate);

    py::class_<MisspecOutcome>(m, "MisspecOutcome")
        .def_readonly("believed_strategy", &MisspecOutcome::believed_strategy)
        .def_readonly("believed_perf", &MisspecOutcome::believed_perf)
        .def_readonly("realized_perf", &MisspecOutcome::realized_perf)
        .def_readonly("realized_feasible", &MisspecOutcome::realized_feasible)
        .def_readonly("constraint_active", &MisspecOutcome::constraint_active);

    py::class_<SimProfitEstimate>(m, "SimProfitEstimate")
        .def_readonly("mean_rate", &SimProfitEstimate::mean_rate)
        .def_readonly("var_rate", &SimProfitEstimate::var_rate)
        .def_readonly("stderr_mean", &SimProfitEstimate::stderr_mean)
        .def_readonly("stderr_var", &SimProfitEstimate::stderr_var)
        .def_readonly("replications", &SimProfitEstimate::replications);

    py::class_<EstimatedParams>(m, "EstimatedParams")
        .def_readonly("params", &EstimatedParams::params)
        .def_readonly("eta", &EstimatedParams::eta)
        .def_readonly("n_obs", &EstimatedParams::n_obs)
        .def_readonly("log_likelihood", &EstimatedParams::log_likelihood)
        .def_readonly("std_errors", &EstimatedParams::std_errors);

    m.def("log_gamma", &specfun::log_gamma, py::arg("x"));
    m.def("digamma", &specfun::digamma, py::arg("x"));

    m.def("cycle_stats", [](double a, double b) { return cycle_stats({a, b}); },
          py::arg("a"), py::arg("b"));
    m.def("evaluate", [](double a, double b, double c) { return evaluate({{a, b}, c}); },
          py::arg("a"), py::arg("b"), py::arg("c"));

    m.def("maximize_unconstrained", &maximize_unconstrained, py::arg("c"),
          py::arg("tol") = kDefaultArgTol);
    m.def(
        "solve_risk_constrained",
        [](double c, double v0, double eps, double tol) {
            return solve_risk_constrained(c, RiskBound{v0}, eps, tol);
        },
        py::arg("c"), py::arg("v0"), py::arg("eps") = kDefaultRiskEps,
        py::arg("tol") = kDefaultArgTol);
    m.def("efficient_frontier", &efficient_frontier, py::arg("c"), py::arg("n_points"),
          py::arg("tol") = kDefaultArgTol);

    m.def("standardize_cost", &standardize_cost, py::arg("params"), py::arg("c_tilde"));
    m.def("destandardize_strategy", &destandardize_strategy, py::arg("params"),
          py::arg("strategy"));
    m.def("destandardize_performance", &destandardize_performance, py::arg("params"),
          py::arg("performance"));

    m.def(
        "analyze_misspec",
        [](const OUParams& truth, const OUParams& believed, double cost_general,
           std::optional<double> v0_general) {
            return analyze({truth, believed, cost_general, v0_general});
        },
        py::arg("true_params"), py::arg("believed_params"), py::arg("cost_general"),
        py::arg("v0_general") = py::none());

    m.def(
        "simulate_profit",
        [](double a, double b, double c, double horizon, std::int64_t reps, double dt,
           std::uint64_t seed) {
            SimConfig cfg;
            cfg.dt = dt;
            cfg.seed = seed;
            return estimate_profit_statistics({{a, b}, c}, horizon, reps, cfg);
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("horizon"), py::arg("reps"),
        py::arg("dt") = 1e-2, py::arg("seed") = 0);

    m.def(
        "estimate_ou",
        [](const std::vector<double>& times, const std::vector<double>& values) {
            return estimate_ou(SpreadSeries{times, values});
        },
        py::arg("times"), py::arg("values"));
}
