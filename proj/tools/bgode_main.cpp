// bgode: benchmark CLI for the multiplicative Runge-Kutta solvers.
//
// Subcommands:
//   run         solve a registered problem and tabulate numeric vs reference
//   converge    fit the endpoint-error order over a step-size ladder
//   timevserror median wall time and endpoint error per (method, h) pair
//
// Talks to the library exclusively through the public C interface.

#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bgode/bgode.h"

namespace {

struct problem_deleter {
    void operator()(bgode_problem* p) const { bgode_problem_free(p); }
};
struct tableau_deleter {
    void operator()(bgode_tableau* t) const { bgode_tableau_free(t); }
};
struct report_deleter {
    void operator()(bgode_report* r) const { bgode_report_free(r); }
};

using problem_ptr = std::unique_ptr<bgode_problem, problem_deleter>;
using tableau_ptr = std::unique_ptr<bgode_tableau, tableau_deleter>;
using report_ptr = std::unique_ptr<bgode_report, report_deleter>;

// Prints the library diagnostic and converts the status into an exit code.
int report_failure(const char* what, bgode_status s) {
    std::fprintf(stderr, "bgode: %s failed (%s): %s\n", what,
                 bgode_status_name(s), bgode_last_error());
    return 1;
}

int fail_usage(const std::string& message) {
    std::fprintf(stderr, "bgode: %s\n", message.c_str());
    return 1;
}

// "key=value" -> pair; complains on anything else.
bool split_param(const std::string& arg, std::string& key, double& value) {
    auto eq = arg.find('=');
    if (eq == std::string::npos || eq == 0) return false;
    key = arg.substr(0, eq);
    try {
        size_t used = 0;
        value = std::stod(arg.substr(eq + 1), &used);
        if (used != arg.size() - eq - 1) return false;
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

struct common_options {
    std::string problem = "log_example";
    std::vector<std::string> params;
};

int open_problem(const common_options& opts, problem_ptr& out) {
    std::vector<std::string> keys;
    std::vector<double> values;
    for (const auto& p : opts.params) {
        std::string key;
        double value = 0;
        if (!split_param(p, key, value))
            return fail_usage("bad --param '" + p + "', expected key=value");
        keys.push_back(key);
        values.push_back(value);
    }
    std::vector<const char*> key_ptrs;
    for (const auto& k : keys) key_ptrs.push_back(k.c_str());
    bgode_problem* raw = nullptr;
    bgode_status s = bgode_problem_open(
        opts.problem.c_str(), key_ptrs.empty() ? nullptr : key_ptrs.data(),
        values.empty() ? nullptr : values.data(),
        static_cast<int>(keys.size()), &raw);
    if (s != BGODE_OK) return report_failure("opening problem", s);
    out.reset(raw);
    return 0;
}

int load_tableau(const std::string& path, tableau_ptr& out) {
    std::ifstream in(path);
    if (!in) return fail_usage("cannot read tableau file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    bgode_tableau* raw = nullptr;
    bgode_status s = bgode_tableau_parse(text.str().c_str(), &raw);
    if (s != BGODE_OK) return report_failure("parsing tableau", s);
    out.reset(raw);
    return 0;
}

// Ladder and endpoint defaults mirror the registered experiment: four
// halvings of the default step, marching to the default horizon.
std::vector<double> default_ladder(const bgode_problem* p) {
    double h = bgode_problem_default_h(p);
    return {h, h / 2, h / 4, h / 8};
}

double default_endpoint(const bgode_problem* p) {
    return bgode_problem_x0(p) +
           bgode_problem_default_h(p) * bgode_problem_default_steps(p);
}

int cmd_run(const common_options& common, const std::string& method, double h,
            int steps, bool h_set, bool steps_set, const std::string& tableau_path,
            const std::vector<double>& points, bool full_grid,
            const std::string& out_path, const std::string& format) {
    problem_ptr problem;
    if (int rc = open_problem(common, problem)) return rc;

    tableau_ptr tableau;
    if (!tableau_path.empty()) {
        if (int rc = load_tableau(tableau_path, tableau)) return rc;
    }

    if (!h_set) h = bgode_problem_default_h(problem.get());
    if (!steps_set) steps = bgode_problem_default_steps(problem.get());

    std::vector<double> report_points = points;
    if (report_points.empty() && !full_grid) {
        int n = bgode_problem_report_point_count(problem.get());
        for (int i = 0; i < n; ++i) {
            double x = 0;
            bgode_problem_report_point(problem.get(), i, &x);
            report_points.push_back(x);
        }
    }

    bgode_report* raw = nullptr;
    bgode_status s = bgode_run_table(
        problem.get(), method.c_str(), h, steps,
        report_points.empty() ? nullptr : report_points.data(),
        static_cast<int>(report_points.size()), tableau.get(), &raw);
    if (s != BGODE_OK) return report_failure("run", s);
    report_ptr report(raw);

    s = bgode_report_emit(report.get(), format.c_str(), out_path.c_str());
    if (s != BGODE_OK) return report_failure("writing report", s);
    return 0;
}

int cmd_converge(const common_options& common, const std::string& method,
                 std::vector<double> ladder, double endpoint, bool endpoint_set,
                 const std::string& out_path) {
    problem_ptr problem;
    if (int rc = open_problem(common, problem)) return rc;

    if (ladder.empty()) ladder = default_ladder(problem.get());
    if (!endpoint_set) endpoint = default_endpoint(problem.get());

    double slope = 0;
    std::vector<double> errs(ladder.size(), 0.0);
    bgode_status s = bgode_convergence_study(
        problem.get(), method.c_str(), ladder.data(),
        static_cast<int>(ladder.size()), endpoint, &slope, errs.data());
    if (s != BGODE_OK) return report_failure("convergence study", s);

    std::ostringstream text;
    text << "problem,method,h,endpoint_rel_err,slope\n";
    char line[160];
    for (size_t i = 0; i < ladder.size(); ++i) {
        std::snprintf(line, sizeof line, "%s,%s,%.17g,%.17g,%.17g\n",
                      common.problem.c_str(), method.c_str(), ladder[i],
                      errs[i], slope);
        text << line;
    }
    if (out_path == "-") {
        std::fputs(text.str().c_str(), stdout);
    } else {
        std::ofstream out(out_path);
        if (!out) return fail_usage("cannot write '" + out_path + "'");
        out << text.str();
    }
    return 0;
}

int cmd_timevserror(const common_options& common, const std::string& methods,
                    std::vector<double> ladder, double endpoint,
                    bool endpoint_set, int repeats,
                    const std::string& out_path) {
    problem_ptr problem;
    if (int rc = open_problem(common, problem)) return rc;

    if (ladder.empty()) ladder = default_ladder(problem.get());
    if (!endpoint_set) endpoint = default_endpoint(problem.get());

    bgode_status s = bgode_time_vs_error(
        problem.get(), methods.c_str(), ladder.data(),
        static_cast<int>(ladder.size()), endpoint, repeats, out_path.c_str());
    if (s != BGODE_OK) return report_failure("time-vs-error study", s);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Multiplicative (bigeometric) Runge-Kutta benchmark harness"};
    // The step-size flag is literally "--h", so help must not claim "-h".
    app.set_help_flag("--help", "Print help and exit");
    app.require_subcommand(1);

    // --- run ---
    common_options run_common;
    std::string run_method = "brk4";
    double run_h = 0;
    int run_steps = 0;
    std::string run_tableau;
    std::vector<double> run_points;
    bool run_full_grid = false;
    std::string run_out = "-";
    std::string run_format = "markdown";

    auto* run = app.add_subcommand(
        "run", "Solve a problem and tabulate numeric vs reference values");
    run->set_help_flag("--help", "Print help and exit");
    run->add_option("--problem", run_common.problem,
                    "Problem name: log_example | sqrt_example | tumor")
        ->capture_default_str();
    run->add_option("--method", run_method, "brk2 | brk4 | rk4")
        ->capture_default_str();
    auto* run_h_opt =
        run->add_option("--h", run_h, "Step size (default: problem's)");
    auto* run_steps_opt =
        run->add_option("--steps", run_steps, "Step count (default: problem's)");
    run->add_option("--param", run_common.params,
                    "Problem parameter override key=value (repeatable)");
    run->add_option("--tableau", run_tableau,
                    "Stepper parameter file, one key=value per line");
    run->add_option("--points", run_points,
                    "Report abscissae (repeatable; default: problem's grid)");
    run->add_flag("--full-grid", run_full_grid,
                  "Report every step instead of the problem's point list");
    run->add_option("--out", run_out, "Output path; '-' for stdout")
        ->capture_default_str();
    run->add_option("--format", run_format, "csv | json | markdown")
        ->capture_default_str();

    // --- converge ---
    common_options conv_common;
    std::string conv_method = "brk4";
    std::vector<double> conv_ladder;
    double conv_endpoint = 0;
    std::string conv_out = "-";

    auto* conv = app.add_subcommand(
        "converge", "Fit the endpoint-error convergence order over an h ladder");
    conv->set_help_flag("--help", "Print help and exit");
    conv->add_option("--problem", conv_common.problem,
                     "Problem name (needs an exact solution)")
        ->capture_default_str();
    conv->add_option("--method", conv_method, "brk2 | brk4 | rk4")
        ->capture_default_str();
    conv->add_option("--h", conv_ladder,
                     "Ladder entry (repeat >= 3 times; default: problem's h "
                     "halved four times)");
    auto* conv_end_opt = conv->add_option(
        "--endpoint", conv_endpoint,
        "March target (default: problem's horizon); every h must reach it "
        "exactly");
    conv->add_option("--out", conv_out, "Output CSV path; '-' for stdout")
        ->capture_default_str();
    conv->add_option("--param", conv_common.params,
                     "Problem parameter override key=value (repeatable)");

    // --- timevserror ---
    common_options tve_common;
    std::string tve_methods = "brk4,rk4";
    std::vector<double> tve_ladder;
    double tve_endpoint = 0;
    int tve_repeats = 5;
    std::string tve_out = "-";

    auto* tve = app.add_subcommand(
        "timevserror",
        "Median march wall time and endpoint error per (method, h) pair");
    tve->set_help_flag("--help", "Print help and exit");
    tve->add_option("--problem", tve_common.problem, "Problem name")
        ->capture_default_str();
    tve->add_option("--methods", tve_methods,
                    "Comma-separated method list from brk2,brk4,rk4")
        ->capture_default_str();
    tve->add_option("--h", tve_ladder,
                    "Ladder entry (repeatable; default: problem's h halved "
                    "four times)");
    auto* tve_end_opt =
        tve->add_option("--endpoint", tve_endpoint,
                        "March target (default: problem's horizon)");
    tve->add_option("--repeats", tve_repeats, "Timing repeats (>= 3)")
        ->capture_default_str();
    tve->add_option("--out", tve_out, "Output CSV path; '-' for stdout")
        ->capture_default_str();
    tve->add_option("--param", tve_common.params,
                    "Problem parameter override key=value (repeatable)");

    CLI11_PARSE(app, argc, argv);

    if (run->parsed())
        return cmd_run(run_common, run_method, run_h, run_steps,
                       run_h_opt->count() > 0, run_steps_opt->count() > 0,
                       run_tableau, run_points, run_full_grid, run_out,
                       run_format);
    if (conv->parsed())
        return cmd_converge(conv_common, conv_method, conv_ladder,
                            conv_endpoint, conv_end_opt->count() > 0, conv_out);
    if (tve->parsed())
        return cmd_timevserror(tve_common, tve_methods, tve_ladder,
                               tve_endpoint, tve_end_opt->count() > 0,
                               tve_repeats, tve_out);
    return fail_usage("no subcommand given");
}
