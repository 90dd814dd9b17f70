#pragma once

#include <optional>
#include <string>
#include <vector>

#include "problems.hpp"
#include "solve.hpp"

namespace bgode {

struct bench_row {
    double x = 0.0;
    std::vector<double> y_num;
    std::vector<double> y_ref;
    std::vector<double> rel_err;
};

// One benchmark run in the shape of the published comparison tables: numeric
// vs reference values with relative errors at the report abscissae.
struct bench_report {
    std::string problem;
    std::string method;
    double h = 0.0;
    int n_steps = 0;
    std::vector<bench_row> rows;
    double wall_time = 0.0;  // seconds spent inside the march only
    std::optional<double> convergence_slope;
};

enum class report_format { csv, json, markdown };
report_format parse_format(const std::string& name);

// Solves the problem and tabulates numeric vs reference values at
// report_points. Each report point must land on the step grid (nearest grid
// point within h/2; the published tumor grid is quoted at t=100,200,... while
// the actual h=0.091 abscissae sit within half a step of those labels).
// Reference values come from the exact solution when available, otherwise
// from a self-generated fine-h order-4 run, linearly interpolated.
// Empty report_points selects every grid point.
bench_report run_table(const problem_def& def, method_kind method, double h,
                       int n_steps, const std::vector<double>& report_points,
                       const std::optional<bg_tableau>& tableau = std::nullopt);

struct convergence_result {
    double slope = 0.0;
    // (h, relative error at the endpoint) per ladder entry.
    std::vector<std::pair<double, double>> per_h;
};

// Endpoint-error power fit: marches each h to the endpoint (which every h
// must reach exactly), measures the relative error against the exact
// solution, and fits ln(error) vs ln(h) by least squares. Needs >= 3 ladder
// entries and an exact solution.
convergence_result convergence_study(
    const problem_def& def, method_kind method,
    const std::vector<double>& h_list, double endpoint,
    const std::optional<bg_tableau>& tableau = std::nullopt);

struct time_error_point {
    std::string method;
    double h = 0.0;
    double seconds = 0.0;  // median march wall time
    double rel_err = 0.0;  // endpoint relative error vs exact or reference
};

// Wall-time/accuracy curves: for each method and ladder step size, the median
// march time over `repeats` runs (marches shorter than ~2 ms are batched and
// averaged so the clock resolution cannot dominate) and the endpoint error.
// Requires repeats >= 3.
std::vector<time_error_point> time_vs_error(
    const problem_def& def, const std::vector<method_kind>& methods,
    const std::vector<double>& h_ladder, double endpoint, int repeats);

// Serializes a report; format csv writes exactly 1 + 3*dim columns
// (x, y_num[_i], y_ref[_i], rel_err[_i]), json mirrors every bench_report
// field, markdown renders a human-readable table. path "-" writes to stdout.
// Reports with no rows are rejected before any file is touched.
void emit(const bench_report& report, report_format format,
          const std::string& path);
std::string render(const bench_report& report, report_format format);

// Inverse of the json rendering; round-trips a report structurally.
bench_report report_from_json(const std::string& text);

void emit_time_vs_error_csv(const std::vector<time_error_point>& points,
                            const std::string& path);

}  // namespace bgode
