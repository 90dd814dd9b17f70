#include "problems.hpp"

#include <cmath>

#include "error.hpp"

namespace bgode {

namespace {

problem_def make_log_example() {
    problem_def def;
    def.name = "log_example";
    def.ivp.dim = 1;
    def.ivp.x0 = 1.0;
    def.ivp.y0 = {1.0};
    // y' = 1 - 1/x  <=>  multiplicative growth exponent g = (x-1)/y.
    def.ivp.rhs.dim = 1;
    def.ivp.rhs.g = [](double x, const double* y, double* out) {
        out[0] = (x - 1.0) / y[0];
    };
    def.ivp.ordinary = rhs_ordinary{
        1, [](double x, const double*, double* out) { out[0] = 1.0 - 1.0 / x; }};
    def.ivp.exact = [](double x, double* out) { out[0] = x - std::log(x); };
    def.default_h = 0.5;
    def.default_steps = 6;
    def.report_points = {1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0};
    return def;
}

problem_def make_sqrt_example() {
    problem_def def;
    def.name = "sqrt_example";
    def.ivp.dim = 1;
    def.ivp.x0 = 4.0;
    def.ivp.y0 = {std::sqrt(5.0)};
    // y' = 1/(2y)  <=>  g = x/(2 y^2).
    def.ivp.rhs.dim = 1;
    def.ivp.rhs.g = [](double x, const double* y, double* out) {
        out[0] = x / (2.0 * y[0] * y[0]);
    };
    def.ivp.ordinary = rhs_ordinary{
        1, [](double, const double* y, double* out) { out[0] = 1.0 / (2.0 * y[0]); }};
    def.ivp.exact = [](double x, double* out) { out[0] = std::sqrt(1.0 + x); };
    def.default_h = 1.0;
    def.default_steps = 6;
    def.report_points = {4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0};
    return def;
}

// Two-species tumor-therapy model over time t: u = uninfected cells,
// v = infected cells, s = u + v.
//   u' = r1 u (1 - s/K) - b u v / (s + a)
//   v' = r2 v (1 - s/K) + b u v / (s + a) - alpha v
// The multiplicative exponents are t times the per-capita rates.
//
// Defaults reproduce the published trajectories. Note two deliberate
// divergences from the figure caption accompanying those trajectories:
// alpha = 0.003 (the caption prints 0.03, under which the infection dies out
// and none of the published table rows is reachable) and v(1)'s companion
// initial value u(1) = 100.0 (never stated alongside the tables; recovered by
// matching them). Both remain overridable. See README for the evidence.
problem_def make_tumor(const std::map<std::string, double>& params) {
    problem_def def;
    def.name = "tumor";
    def.param_set = {{"r1", 40.0}, {"K", 100.0}, {"r2", 2.0},
                     {"a", 0.05},  {"b", 0.02},  {"alpha", 0.003}};
    double x1 = 100.0;  // initial uninfected density u(1)
    double y1 = 0.1;    // initial infected density v(1)
    for (const auto& [key, value] : params) {
        if (def.param_set.count(key) != 0) {
            def.param_set[key] = value;
        } else if (key == "x1") {
            x1 = value;
        } else if (key == "y1") {
            y1 = value;
        } else {
            fail(status::invalid_argument,
                 "tumor model has no parameter '" + key + "'");
        }
    }
    for (const auto& [key, value] : def.param_set) {
        if (value < 0.0) {
            fail(status::invalid_argument, "tumor parameter '" + key +
                                               "' must be nonnegative");
        }
    }
    const double r1 = def.param_set["r1"];
    const double r2 = def.param_set["r2"];
    const double K = def.param_set["K"];
    const double a = def.param_set["a"];
    const double b = def.param_set["b"];
    const double alpha = def.param_set["alpha"];

    def.ivp.dim = 2;
    def.ivp.x0 = 1.0;
    def.ivp.y0 = {x1, y1};
    def.ivp.rhs.dim = 2;
    def.ivp.rhs.g = [=](double t, const double* y, double* out) {
        const double s = y[0] + y[1];
        const double infect = b / (s + a);
        const double crowd = 1.0 - s / K;
        out[0] = t * (r1 * crowd - infect * y[1]);
        out[1] = t * (r2 * crowd + infect * y[0] - alpha);
    };
    def.ivp.ordinary = rhs_ordinary{
        2, [=](double, const double* y, double* out) {
            const double s = y[0] + y[1];
            const double cross = b * y[0] * y[1] / (s + a);
            const double crowd = 1.0 - s / K;
            out[0] = r1 * y[0] * crowd - cross;
            out[1] = r2 * y[1] * crowd + cross - alpha * y[1];
        }};
    def.default_h = 0.091;
    // Horizon t = 1000: last full step that stays inside the horizon.
    def.default_steps = static_cast<int>(std::floor((1000.0 - 1.0) / 0.091));
    def.report_points = {1.0,   100.0, 200.0, 300.0, 400.0, 500.0,
                         600.0, 700.0, 800.0, 900.0, 1000.0};
    def.reference_h = 0.005;
    return def;
}

}  // namespace

std::vector<std::string> problem_names() {
    return {"log_example", "sqrt_example", "tumor"};
}

problem_def problem(const std::string& name,
                    const std::map<std::string, double>& overrides) {
    if (name == "log_example" || name == "sqrt_example") {
        if (!overrides.empty()) {
            fail(status::invalid_argument,
                 "problem '" + name + "' has no overridable parameters");
        }
        return name == "log_example" ? make_log_example() : make_sqrt_example();
    }
    if (name == "tumor") {
        return make_tumor(overrides);
    }
    fail(status::lookup, "unknown problem '" + name +
                             "' (log_example|sqrt_example|tumor)");
}

std::vector<std::pair<double, std::vector<double>>> exact_error(
    const problem_def& def, const trajectory& traj) {
    if (!def.ivp.exact) {
        fail(status::invalid_argument,
             "problem '" + def.name + "' has no exact solution");
    }
    const std::size_t dim = static_cast<std::size_t>(traj.dim);
    std::vector<double> ref(dim);
    std::vector<std::pair<double, std::vector<double>>> rows;
    rows.reserve(traj.size());
    for (std::size_t k = 0; k < traj.size(); ++k) {
        (*def.ivp.exact)(traj.xs[k], ref.data());
        std::vector<double> errs(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            errs[i] = std::fabs(traj.y_at(k)[i] - ref[i]) / std::fabs(ref[i]);
        }
        rows.emplace_back(traj.xs[k], std::move(errs));
    }
    return rows;
}

}  // namespace bgode
