#pragma once

#include <map>
#include <string>
#include <vector>

#include "ivp.hpp"

namespace bgode {

// A registered benchmark problem: the IVP itself plus the step size, horizon
// and report grid of the published experiment it reproduces.
struct problem_def {
    std::string name;
    ivp_spec ivp;
    double default_h = 0.1;
    int default_steps = 10;
    // Named scalar parameters (tumor model only); empty for the others.
    std::map<std::string, double> param_set;
    // Abscissae of the published table rows, including the initial point.
    std::vector<double> report_points;
    // When > 0 the problem has no closed-form solution and the reference
    // trajectory is self-generated with the order-4 multiplicative stepper at
    // this step size.
    double reference_h = 0.0;
};

std::vector<std::string> problem_names();

// Looks up a problem by name (log_example | sqrt_example | tumor), optionally
// overriding named parameters. The tumor model accepts r1, r2, K, a, b, alpha
// plus the initial values x1 and y1; the scalar problems accept no overrides.
// Unknown names -> lookup error; unknown parameter keys -> invalid_argument.
problem_def problem(const std::string& name,
                    const std::map<std::string, double>& overrides = {});

// Per-point relative error of a trajectory against the problem's exact
// solution: rows of (x, per-component |y_num - y_exact| / |y_exact|).
// Rejected when the problem has no exact solution.
std::vector<std::pair<double, std::vector<double>>> exact_error(
    const problem_def& def, const trajectory& traj);

}  // namespace bgode
