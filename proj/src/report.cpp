#include "report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "error.hpp"

namespace bgode {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

// Grid index of a report point; the point must sit within h/2 of a grid node.
std::size_t grid_index(const trajectory& traj, double point) {
    const double x0 = traj.xs.front();
    const double k = std::round((point - x0) / traj.h);
    if (k < 0.0 || k >= static_cast<double>(traj.size())) {
        fail(status::invalid_argument,
             "report point " + std::to_string(point) +
                 " lies outside the computed grid");
    }
    const auto idx = static_cast<std::size_t>(k);
    if (std::fabs(traj.xs[idx] - point) > 0.5 * traj.h + 1e-12) {
        fail(status::invalid_argument,
             "report point " + std::to_string(point) +
                 " is more than h/2 from the nearest grid node");
    }
    return idx;
}

// Linear interpolation of a fine reference trajectory at abscissa x.
void interpolate(const trajectory& ref, double x, double* out) {
    const double x0 = ref.xs.front();
    double pos = (x - x0) / ref.h;
    pos = std::clamp(pos, 0.0, static_cast<double>(ref.size() - 1));
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, ref.size() - 1);
    const double w = pos - static_cast<double>(lo);
    const std::size_t dim = static_cast<std::size_t>(ref.dim);
    for (std::size_t i = 0; i < dim; ++i) {
        out[i] = (1.0 - w) * ref.y_at(lo)[i] + w * ref.y_at(hi)[i];
    }
}

trajectory reference_trajectory(const problem_def& def, double x_end) {
    const double h = def.reference_h;
    const int steps =
        static_cast<int>(std::ceil((x_end - def.ivp.x0) / h - 1e-9));
    return solve(def.ivp, method_kind::brk4, h, steps);
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return (n % 2 == 1) ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

int steps_to_endpoint(const problem_def& def, double h, double endpoint) {
    const double raw = (endpoint - def.ivp.x0) / h;
    const double rounded = std::round(raw);
    if (rounded < 1.0 || std::fabs(raw - rounded) > 1e-9 * std::max(1.0, raw)) {
        fail(status::invalid_argument,
             "step size " + std::to_string(h) +
                 " does not reach the endpoint " + std::to_string(endpoint) +
                 " exactly");
    }
    return static_cast<int>(rounded);
}

double endpoint_rel_error(const problem_def& def, const trajectory& traj,
                          const trajectory* ref) {
    const std::size_t last = traj.size() - 1;
    const std::size_t dim = static_cast<std::size_t>(traj.dim);
    std::vector<double> expected(dim);
    if (def.ivp.exact) {
        (*def.ivp.exact)(traj.xs[last], expected.data());
    } else if (ref != nullptr) {
        interpolate(*ref, traj.xs[last], expected.data());
    } else {
        fail(status::invalid_argument,
             "problem '" + def.name + "' has neither exact solution nor reference");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        worst = std::max(worst, std::fabs(traj.y_at(last)[i] - expected[i]) /
                                    std::fabs(expected[i]));
    }
    return worst;
}

void append_number(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

}  // namespace

report_format parse_format(const std::string& name) {
    if (name == "csv") return report_format::csv;
    if (name == "json") return report_format::json;
    if (name == "markdown" || name == "md") return report_format::markdown;
    fail(status::lookup, "unknown format '" + name + "' (csv|json|markdown)");
}

bench_report run_table(const problem_def& def, method_kind method, double h,
                       int n_steps, const std::vector<double>& report_points,
                       const std::optional<bg_tableau>& tableau) {
    bench_report report;
    report.problem = def.name;
    report.method = method_name(method);
    report.h = h;
    report.n_steps = n_steps;

    const auto start = clock_type::now();
    const trajectory traj = solve(def.ivp, method, h, n_steps, tableau);
    report.wall_time = seconds_since(start);

    std::optional<trajectory> ref;
    if (!def.ivp.exact) {
        ref = reference_trajectory(def, traj.xs.back());
    }

    std::vector<double> points = report_points;
    if (points.empty()) {
        points = traj.xs;
    }

    const std::size_t dim = static_cast<std::size_t>(traj.dim);
    for (double p : points) {
        const std::size_t idx = grid_index(traj, p);
        bench_row row;
        row.x = traj.xs[idx];
        row.y_num.assign(traj.y_at(idx), traj.y_at(idx) + dim);
        row.y_ref.resize(dim);
        if (def.ivp.exact) {
            (*def.ivp.exact)(row.x, row.y_ref.data());
        } else {
            interpolate(*ref, row.x, row.y_ref.data());
        }
        row.rel_err.resize(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            row.rel_err[i] = std::fabs(row.y_num[i] - row.y_ref[i]) /
                             std::fabs(row.y_ref[i]);
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

convergence_result convergence_study(const problem_def& def,
                                     method_kind method,
                                     const std::vector<double>& h_list,
                                     double endpoint,
                                     const std::optional<bg_tableau>& tableau) {
    if (h_list.size() < 3) {
        fail(status::invalid_argument,
             "convergence study needs at least 3 step sizes, got " +
                 std::to_string(h_list.size()));
    }
    if (!def.ivp.exact) {
        fail(status::invalid_argument,
             "convergence study needs an exact solution; '" + def.name +
                 "' has none");
    }

    convergence_result result;
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (double h : h_list) {
        const int steps = steps_to_endpoint(def, h, endpoint);
        const trajectory traj = solve(def.ivp, method, h, steps, tableau);
        const double err = endpoint_rel_error(def, traj, nullptr);
        result.per_h.emplace_back(h, err);
        const double lx = std::log(h);
        const double ly = std::log(err);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double n = static_cast<double>(h_list.size());
    result.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return result;
}

std::vector<time_error_point> time_vs_error(
    const problem_def& def, const std::vector<method_kind>& methods,
    const std::vector<double>& h_ladder, double endpoint, int repeats) {
    if (repeats < 3) {
        fail(status::invalid_argument,
             "time_vs_error needs repeats >= 3, got " + std::to_string(repeats));
    }
    std::optional<trajectory> ref;
    if (!def.ivp.exact) {
        ref = reference_trajectory(def, endpoint);
    }

    constexpr double min_window = 2e-3;  // seconds per timed batch
    std::vector<time_error_point> points;
    for (method_kind m : methods) {
        for (double h : h_ladder) {
            const int steps = steps_to_endpoint(def, h, endpoint);

            // Calibrate: batch enough marches that one timing window is well
            // above clock resolution.
            auto probe_start = clock_type::now();
            trajectory traj = solve(def.ivp, m, h, steps);
            const double probe = seconds_since(probe_start);
            const int batch = (probe >= min_window)
                                  ? 1
                                  : static_cast<int>(
                                        std::ceil(min_window /
                                                  std::max(probe, 1e-7)));

            std::vector<double> times;
            times.reserve(static_cast<std::size_t>(repeats));
            for (int r = 0; r < repeats; ++r) {
                const auto start = clock_type::now();
                for (int i = 0; i < batch; ++i) {
                    traj = solve(def.ivp, m, h, steps);
                }
                times.push_back(seconds_since(start) /
                                static_cast<double>(batch));
            }

            time_error_point pt;
            pt.method = method_name(m);
            pt.h = h;
            pt.seconds = median(std::move(times));
            pt.rel_err = endpoint_rel_error(def, traj,
                                            ref ? &*ref : nullptr);
            points.push_back(std::move(pt));
        }
    }
    return points;
}

std::string render(const bench_report& report, report_format format) {
    if (report.rows.empty()) {
        fail(status::invalid_argument, "refusing to render a report with no rows");
    }
    const std::size_t dim = report.rows.front().y_num.size();

    if (format == report_format::csv) {
        std::string out = "x";
        auto columns = [&](const char* stem) {
            if (dim == 1) {
                out += ",";
                out += stem;
            } else {
                for (std::size_t i = 1; i <= dim; ++i) {
                    out += ",";
                    out += stem;
                    out += "_" + std::to_string(i);
                }
            }
        };
        columns("y_num");
        columns("y_ref");
        columns("rel_err");
        out += "\n";
        for (const auto& row : report.rows) {
            append_number(out, row.x);
            for (double v : row.y_num) { out += ","; append_number(out, v); }
            for (double v : row.y_ref) { out += ","; append_number(out, v); }
            for (double v : row.rel_err) { out += ","; append_number(out, v); }
            out += "\n";
        }
        return out;
    }

    if (format == report_format::json) {
        nlohmann::json j;
        j["problem"] = report.problem;
        j["method"] = report.method;
        j["h"] = report.h;
        j["n_steps"] = report.n_steps;
        j["wall_time_seconds"] = report.wall_time;
        if (report.convergence_slope) {
            j["convergence_slope"] = *report.convergence_slope;
        } else {
            j["convergence_slope"] = nullptr;
        }
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : report.rows) {
            rows.push_back({{"x", row.x},
                            {"y_num", row.y_num},
                            {"y_ref", row.y_ref},
                            {"rel_err", row.rel_err}});
        }
        j["rows"] = std::move(rows);
        return j.dump(2) + "\n";
    }

    // Markdown: readable precision, one column group per component.
    std::ostringstream out;
    out << "| x |";
    auto md_columns = [&](const std::string& stem) {
        if (dim == 1) {
            out << " " << stem << " |";
        } else {
            for (std::size_t i = 1; i <= dim; ++i) {
                out << " " << stem << "_" << i << " |";
            }
        }
    };
    md_columns("y_num");
    md_columns("y_ref");
    md_columns("rel_err");
    out << "\n|";
    for (std::size_t i = 0; i < 1 + 3 * dim; ++i) {
        out << "---|";
    }
    out << "\n";
    char buf[40];
    for (const auto& row : report.rows) {
        auto cell = [&](double v) {
            std::snprintf(buf, sizeof(buf), "%.8g", v);
            out << " " << buf << " |";
        };
        out << "|";
        cell(row.x);
        for (double v : row.y_num) cell(v);
        for (double v : row.y_ref) cell(v);
        for (double v : row.rel_err) cell(v);
        out << "\n";
    }
    return out.str();
}

void emit(const bench_report& report, report_format format,
          const std::string& path) {
    const std::string text = render(report, format);
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        fail(status::io, "cannot open '" + path + "' for writing");
    }
    file << text;
    if (!file.good()) {
        fail(status::io, "write failed for '" + path + "'");
    }
}

bench_report report_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        fail(status::invalid_argument,
             std::string("report json does not parse: ") + e.what());
    }
    bench_report report;
    try {
        report.problem = j.at("problem").get<std::string>();
        report.method = j.at("method").get<std::string>();
        report.h = j.at("h").get<double>();
        report.n_steps = j.at("n_steps").get<int>();
        report.wall_time = j.at("wall_time_seconds").get<double>();
        if (!j.at("convergence_slope").is_null()) {
            report.convergence_slope = j.at("convergence_slope").get<double>();
        }
        for (const auto& row_json : j.at("rows")) {
            bench_row row;
            row.x = row_json.at("x").get<double>();
            row.y_num = row_json.at("y_num").get<std::vector<double>>();
            row.y_ref = row_json.at("y_ref").get<std::vector<double>>();
            row.rel_err = row_json.at("rel_err").get<std::vector<double>>();
            report.rows.push_back(std::move(row));
        }
    } catch (const error&) {
        throw;
    } catch (const std::exception& e) {
        fail(status::invalid_argument,
             std::string("report json has wrong shape: ") + e.what());
    }
    return report;
}

void emit_time_vs_error_csv(const std::vector<time_error_point>& points,
                            const std::string& path) {
    if (points.empty()) {
        fail(status::invalid_argument, "refusing to write an empty curve");
    }
    std::string out = "method,h,median_seconds,rel_err\n";
    for (const auto& pt : points) {
        out += pt.method;
        out += ",";
        append_number(out, pt.h);
        out += ",";
        append_number(out, pt.seconds);
        out += ",";
        append_number(out, pt.rel_err);
        out += "\n";
    }
    if (path == "-") {
        std::cout << out;
        std::cout.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        fail(status::io, "cannot open '" + path + "' for writing");
    }
    file << out;
    if (!file.good()) {
        fail(status::io, "write failed for '" + path + "'");
    }
}

}  // namespace bgode
