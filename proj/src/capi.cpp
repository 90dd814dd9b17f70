// C boundary: wraps the C++ core in opaque handles, converts thrown errors
// into status codes, and keeps the failing message in thread-local storage.

#include "bgode/bgode.h"

#include <cstdio>
#include <cstring>
#include <exception>
#include <map>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "calculus.hpp"
#include "error.hpp"
#include "problems.hpp"
#include "report.hpp"
#include "solve.hpp"
#include "stirling.hpp"
#include "tableau.hpp"

namespace {

thread_local std::string g_last_error;

template <typename Fn>
bgode_status guarded(Fn&& body) noexcept {
    try {
        body();
        return BGODE_OK;
    } catch (const bgode::error& e) {
        g_last_error = e.what();
        return static_cast<bgode_status>(static_cast<int>(e.code()));
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return BGODE_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return BGODE_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return BGODE_ERR_INTERNAL;
    }
}

void require(bool ok, const char* message) {
    if (!ok) bgode::fail(bgode::status::invalid_argument, message);
}

bgode::scalar_fn wrap_scalar(bgode_scalar_fn f, void* user) {
    require(f != nullptr, "scalar function pointer is null");
    return [f, user](double x) { return f(x, user); };
}

}  // namespace

// The two enums must agree value for value.
static_assert(static_cast<int>(bgode::status::ok) == BGODE_OK);
static_assert(static_cast<int>(bgode::status::invalid_argument) ==
              BGODE_ERR_INVALID_ARGUMENT);
static_assert(static_cast<int>(bgode::status::domain) == BGODE_ERR_DOMAIN);
static_assert(static_cast<int>(bgode::status::overflow) == BGODE_ERR_OVERFLOW);
static_assert(static_cast<int>(bgode::status::step_failure) ==
              BGODE_ERR_STEP_FAILURE);
static_assert(static_cast<int>(bgode::status::config) == BGODE_ERR_CONFIG);
static_assert(static_cast<int>(bgode::status::lookup) == BGODE_ERR_LOOKUP);
static_assert(static_cast<int>(bgode::status::io) == BGODE_ERR_IO);
static_assert(static_cast<int>(bgode::status::internal) == BGODE_ERR_INTERNAL);

struct bgode_stack {
    bgode::deriv_stack impl;
};

struct bgode_tableau {
    bgode::bg_tableau impl;
    bgode::tableau_report report;
};

struct bgode_problem {
    bgode::problem_def impl;
};

struct bgode_trajectory {
    bgode::trajectory impl;
};

struct bgode_report {
    bgode::bench_report impl;
};

extern "C" {

const char* bgode_status_name(bgode_status s) {
    return bgode::status_name(static_cast<bgode::status>(static_cast<int>(s)));
}

const char* bgode_last_error(void) { return g_last_error.c_str(); }

/* ---------------- scalar multiplicative calculus ---------------- */

bgode_status bgode_bg_derivative(bgode_scalar_fn f, void* user, double x,
                                 double h0, double* out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        auto fn = wrap_scalar(f, user);
        *out = bgode::bg_derivative(fn, x, h0 > 0 ? h0 : bgode::default_h0);
    });
}

bgode_status bgode_bg_limit_quotient(bgode_scalar_fn f, void* user, double x,
                                     double h, double* out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        auto fn = wrap_scalar(f, user);
        *out = bgode::bg_limit_quotient(fn, x, h);
    });
}

bgode_status bgode_stack_create(bgode_scalar_fn f, void* user, double x,
                                int order, double h0, bgode_stack** out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        auto fn = wrap_scalar(f, user);
        *out = new bgode_stack{bgode::deriv_stack(
            fn, x, order, h0 > 0 ? h0 : bgode::default_h0)};
    });
}

void bgode_stack_free(bgode_stack* s) { delete s; }

int bgode_stack_order(const bgode_stack* s) {
    return s ? s->impl.order() : -1;
}

bgode_status bgode_stack_value(const bgode_stack* s, int i, double* out) {
    return guarded([&] {
        require(s != nullptr, "stack handle is null");
        require(out != nullptr, "output pointer is null");
        *out = s->impl.value(i);
    });
}

bgode_status bgode_geometric_from_bigeometric(const bgode_stack* s, int n,
                                              double* out) {
    return guarded([&] {
        require(s != nullptr, "stack handle is null");
        require(out != nullptr, "output pointer is null");
        *out = bgode::geometric_from_bigeometric(s->impl, n);
    });
}

bgode_status bgode_taylor_eval(const bgode_stack* s, double h, double* out) {
    return guarded([&] {
        require(s != nullptr, "stack handle is null");
        require(out != nullptr, "output pointer is null");
        *out = bgode::bg_taylor_eval(s->impl, h);
    });
}

bgode_status bgode_stirling_unsigned(int n, int j, uint64_t* out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        *out = bgode::stirling_unsigned(n, j);
    });
}

bgode_status bgode_stirling_log_series(int m, double u, int N, double* out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        *out = bgode::stirling_log_series(m, u, N);
    });
}

/* ---------------- stepper parameter tables ---------------- */

namespace {

bgode_status make_tableau(bgode::bg_tableau t, bgode_tableau** out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        auto report = bgode::validate_tableau(t);
        *out = new bgode_tableau{t, std::move(report)};
    });
}

}  // namespace

bgode_status bgode_tableau_classical4(bgode_tableau** out) {
    return make_tableau(bgode::bg_tableau::classical4(), out);
}

bgode_status bgode_tableau_trapezoidal2(bgode_tableau** out) {
    return make_tableau(bgode::bg_tableau::trapezoidal2(), out);
}

bgode_status bgode_tableau_parse(const char* text, bgode_tableau** out) {
    return guarded([&] {
        require(text != nullptr, "tableau text is null");
        require(out != nullptr, "output pointer is null");
        auto t = bgode::parse_tableau_text(text);
        auto report = bgode::validate_tableau(t);
        *out = new bgode_tableau{t, std::move(report)};
    });
}

void bgode_tableau_free(bgode_tableau* t) { delete t; }

int bgode_tableau_condition_count(const bgode_tableau* t) {
    return t ? static_cast<int>(t->report.conditions.size()) : 0;
}

bgode_status bgode_tableau_condition(const bgode_tableau* t, int i,
                                     char* name_buf, size_t name_cap,
                                     double* residual, int* pass) {
    return guarded([&] {
        require(t != nullptr, "tableau handle is null");
        require(i >= 0 && i < static_cast<int>(t->report.conditions.size()),
                "condition index out of range");
        const auto& c = t->report.conditions[static_cast<size_t>(i)];
        if (name_buf != nullptr && name_cap > 0) {
            std::snprintf(name_buf, name_cap, "%s", c.name.c_str());
        }
        if (residual != nullptr) *residual = c.residual;
        if (pass != nullptr) *pass = c.pass ? 1 : 0;
    });
}

int bgode_tableau_ok(const bgode_tableau* t) {
    return (t != nullptr && t->report.ok) ? 1 : 0;
}

/* ---------------- benchmark problems and solving ---------------- */

bgode_status bgode_problem_open(const char* name, const char* const* param_keys,
                                const double* param_values, int n_params,
                                bgode_problem** out) {
    return guarded([&] {
        require(name != nullptr, "problem name is null");
        require(out != nullptr, "output pointer is null");
        require(n_params >= 0, "negative parameter count");
        require(n_params == 0 ||
                    (param_keys != nullptr && param_values != nullptr),
                "parameter arrays are null");
        std::map<std::string, double> overrides;
        for (int i = 0; i < n_params; ++i) {
            require(param_keys[i] != nullptr, "parameter key is null");
            overrides[param_keys[i]] = param_values[i];
        }
        *out = new bgode_problem{bgode::problem(name, overrides)};
    });
}

void bgode_problem_free(bgode_problem* p) { delete p; }

int bgode_problem_dim(const bgode_problem* p) {
    return p ? p->impl.ivp.dim : 0;
}

double bgode_problem_x0(const bgode_problem* p) {
    return p ? p->impl.ivp.x0 : 0.0;
}

double bgode_problem_default_h(const bgode_problem* p) {
    return p ? p->impl.default_h : 0.0;
}

int bgode_problem_default_steps(const bgode_problem* p) {
    return p ? p->impl.default_steps : 0;
}

int bgode_problem_report_point_count(const bgode_problem* p) {
    return p ? static_cast<int>(p->impl.report_points.size()) : 0;
}

bgode_status bgode_problem_report_point(const bgode_problem* p, int i,
                                        double* out) {
    return guarded([&] {
        require(p != nullptr, "problem handle is null");
        require(out != nullptr, "output pointer is null");
        require(i >= 0 && i < static_cast<int>(p->impl.report_points.size()),
                "report point index out of range");
        *out = p->impl.report_points[static_cast<size_t>(i)];
    });
}

bgode_status bgode_solve(const bgode_problem* p, const char* method, double h,
                         int n_steps, const bgode_tableau* tableau,
                         bgode_trajectory** out) {
    return guarded([&] {
        require(p != nullptr, "problem handle is null");
        require(method != nullptr, "method name is null");
        require(out != nullptr, "output pointer is null");
        std::optional<bgode::bg_tableau> t;
        if (tableau != nullptr) t = tableau->impl;
        auto traj =
            bgode::solve(p->impl.ivp, bgode::parse_method(method), h, n_steps, t);
        *out = new bgode_trajectory{std::move(traj)};
    });
}

void bgode_trajectory_free(bgode_trajectory* t) { delete t; }

size_t bgode_trajectory_size(const bgode_trajectory* t) {
    return t ? t->impl.size() : 0;
}

int bgode_trajectory_dim(const bgode_trajectory* t) {
    return t ? t->impl.dim : 0;
}

bgode_status bgode_trajectory_point(const bgode_trajectory* t, size_t k,
                                    double* x_out, double* y_out) {
    return guarded([&] {
        require(t != nullptr, "trajectory handle is null");
        require(k < t->impl.size(), "trajectory index out of range");
        if (x_out != nullptr) *x_out = t->impl.xs[k];
        if (y_out != nullptr) {
            const double* row = t->impl.y_at(k);
            std::memcpy(y_out, row,
                        sizeof(double) * static_cast<size_t>(t->impl.dim));
        }
    });
}

int bgode_trajectory_fallback_count(const bgode_trajectory* t) {
    return t ? static_cast<int>(t->impl.fallback_spans.size()) : 0;
}

bgode_status bgode_trajectory_fallback_span(const bgode_trajectory* t, int i,
                                            double* lo, double* hi) {
    return guarded([&] {
        require(t != nullptr, "trajectory handle is null");
        require(i >= 0 &&
                    i < static_cast<int>(t->impl.fallback_spans.size()),
                "fallback span index out of range");
        const auto& span = t->impl.fallback_spans[static_cast<size_t>(i)];
        if (lo != nullptr) *lo = span.first;
        if (hi != nullptr) *hi = span.second;
    });
}

/* ---------------- benchmark reports ---------------- */

bgode_status bgode_run_table(const bgode_problem* p, const char* method,
                             double h, int n_steps,
                             const double* report_points, int n_points,
                             const bgode_tableau* tableau, bgode_report** out) {
    return guarded([&] {
        require(p != nullptr, "problem handle is null");
        require(method != nullptr, "method name is null");
        require(out != nullptr, "output pointer is null");
        require(n_points >= 0, "negative report point count");
        require(n_points == 0 || report_points != nullptr,
                "report point array is null");
        std::vector<double> points(report_points, report_points + n_points);
        std::optional<bgode::bg_tableau> t;
        if (tableau != nullptr) t = tableau->impl;
        auto rep = bgode::run_table(p->impl, bgode::parse_method(method), h,
                                    n_steps, points, t);
        *out = new bgode_report{std::move(rep)};
    });
}

void bgode_report_free(bgode_report* r) { delete r; }

int bgode_report_row_count(const bgode_report* r) {
    return r ? static_cast<int>(r->impl.rows.size()) : 0;
}

int bgode_report_dim(const bgode_report* r) {
    if (r == nullptr || r->impl.rows.empty()) return 0;
    return static_cast<int>(r->impl.rows.front().y_num.size());
}

double bgode_report_wall_time(const bgode_report* r) {
    return r ? r->impl.wall_time : 0.0;
}

bgode_status bgode_report_row(const bgode_report* r, int i, double* x,
                              double* y_num, double* y_ref, double* rel_err) {
    return guarded([&] {
        require(r != nullptr, "report handle is null");
        require(i >= 0 && i < static_cast<int>(r->impl.rows.size()),
                "report row index out of range");
        const auto& row = r->impl.rows[static_cast<size_t>(i)];
        size_t dim = row.y_num.size();
        if (x != nullptr) *x = row.x;
        if (y_num != nullptr)
            std::memcpy(y_num, row.y_num.data(), sizeof(double) * dim);
        if (y_ref != nullptr)
            std::memcpy(y_ref, row.y_ref.data(), sizeof(double) * dim);
        if (rel_err != nullptr)
            std::memcpy(rel_err, row.rel_err.data(), sizeof(double) * dim);
    });
}

bgode_status bgode_report_emit(const bgode_report* r, const char* format,
                               const char* path) {
    return guarded([&] {
        require(r != nullptr, "report handle is null");
        require(format != nullptr, "format name is null");
        require(path != nullptr, "output path is null");
        bgode::emit(r->impl, bgode::parse_format(format), path);
    });
}

bgode_status bgode_report_parse_json(const char* text, bgode_report** out) {
    return guarded([&] {
        require(text != nullptr, "json text is null");
        require(out != nullptr, "output pointer is null");
        *out = new bgode_report{bgode::report_from_json(text)};
    });
}

bgode_status bgode_convergence_study(const bgode_problem* p,
                                     const char* method, const double* h_list,
                                     int n_h, double endpoint,
                                     double* slope_out, double* errs_out) {
    return guarded([&] {
        require(p != nullptr, "problem handle is null");
        require(method != nullptr, "method name is null");
        require(n_h >= 0, "negative ladder size");
        require(n_h == 0 || h_list != nullptr, "step ladder is null");
        std::vector<double> hs(h_list, h_list + n_h);
        auto result = bgode::convergence_study(
            p->impl, bgode::parse_method(method), hs, endpoint);
        if (slope_out != nullptr) *slope_out = result.slope;
        if (errs_out != nullptr) {
            for (size_t i = 0; i < result.per_h.size(); ++i)
                errs_out[i] = result.per_h[i].second;
        }
    });
}

bgode_status bgode_time_vs_error(const bgode_problem* p,
                                 const char* methods_csv, const double* h_list,
                                 int n_h, double endpoint, int repeats,
                                 const char* csv_path) {
    return guarded([&] {
        require(p != nullptr, "problem handle is null");
        require(methods_csv != nullptr, "method list is null");
        require(csv_path != nullptr, "output path is null");
        require(n_h >= 0, "negative ladder size");
        require(n_h == 0 || h_list != nullptr, "step ladder is null");
        std::vector<bgode::method_kind> methods;
        std::string csv(methods_csv);
        size_t start = 0;
        while (start <= csv.size()) {
            size_t comma = csv.find(',', start);
            std::string token = comma == std::string::npos
                                    ? csv.substr(start)
                                    : csv.substr(start, comma - start);
            size_t first = token.find_first_not_of(" \t");
            size_t last = token.find_last_not_of(" \t");
            if (first != std::string::npos)
                methods.push_back(
                    bgode::parse_method(token.substr(first, last - first + 1)));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        require(!methods.empty(), "method list is empty");
        std::vector<double> hs(h_list, h_list + n_h);
        auto points =
            bgode::time_vs_error(p->impl, methods, hs, endpoint, repeats);
        bgode::emit_time_vs_error_csv(points, csv_path);
    });
}

}  // extern "C"
