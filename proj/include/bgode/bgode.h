/*
 * bgode: multiplicative (bigeometric) calculus operators and Runge-Kutta
 * solvers with a classical reference method and a benchmark harness.
 *
 * C interface: every object is an opaque handle created and destroyed here;
 * every fallible call returns a bgode_status and reports details through
 * bgode_last_error(), which is thread-local.
 */
#ifndef BGODE_H
#define BGODE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bgode_status {
    BGODE_OK = 0,
    BGODE_ERR_INVALID_ARGUMENT = 1, /* malformed sizes, null handles, bad enums */
    BGODE_ERR_DOMAIN = 2,           /* x <= 0, non-positive samples, |u| >= 1 */
    BGODE_ERR_OVERFLOW = 3,         /* exact integer range exceeded */
    BGODE_ERR_STEP_FAILURE = 4,     /* non-finite RHS at a solver stage */
    BGODE_ERR_CONFIG = 5,           /* inconsistent solver configuration */
    BGODE_ERR_LOOKUP = 6,           /* unknown problem/method/format name */
    BGODE_ERR_IO = 7,               /* file write/read failure */
    BGODE_ERR_INTERNAL = 8
} bgode_status;

const char* bgode_status_name(bgode_status s);

/* Message for the most recent failing call on this thread; empty string when
 * no failure has occurred. The pointer stays valid until the next failing
 * call on the same thread. */
const char* bgode_last_error(void);

/* ---------------- scalar multiplicative calculus ---------------- */

/* Strictly positive scalar function of a positive abscissa. */
typedef double (*bgode_scalar_fn)(double x, void* user);

/* Multiplicative derivative exp(x (ln f)'(x)) via a central difference on
 * ln f with multiplicative stencil width h0 (pass 0 for the default 1e-5). */
bgode_status bgode_bg_derivative(bgode_scalar_fn f, void* user, double x,
                                 double h0, double* out);

/* Finite-h defining quotient (f((1+h)x)/f(x))^(1/h). */
bgode_status bgode_bg_limit_quotient(bgode_scalar_fn f, void* user, double x,
                                     double h, double* out);

/* Tower f, f^pi, f^pipi, ..., f^pi(order) evaluated at one abscissa. */
typedef struct bgode_stack bgode_stack;

bgode_status bgode_stack_create(bgode_scalar_fn f, void* user, double x,
                                int order, double h0, bgode_stack** out);
void bgode_stack_free(bgode_stack* s);
int bgode_stack_order(const bgode_stack* s);
/* i-th tower entry, 0 <= i <= order; entry 0 is f(x) itself. */
bgode_status bgode_stack_value(const bgode_stack* s, int i, double* out);

/* n-th geometric (multiplicative) derivative assembled from the tower via
 * exact Stirling-number exponents. */
bgode_status bgode_geometric_from_bigeometric(const bgode_stack* s, int n,
                                              double* out);

/* Degree-order multiplicative Taylor polynomial evaluated at x + h. */
bgode_status bgode_taylor_eval(const bgode_stack* s, double h, double* out);

/* Unsigned Stirling number of the first kind s(n, j); exact for n <= 20,
 * BGODE_ERR_OVERFLOW beyond. */
bgode_status bgode_stirling_unsigned(int n, int j, uint64_t* out);

/* Truncated series sum_{j=m..N} (-1)^(j-m) s(j,m) u^j / j!, which converges
 * to (ln(1+u))^m / m!. Requires |u| < 1. */
bgode_status bgode_stirling_log_series(int m, double u, int N, double* out);

/* ---------------- stepper parameter tables ---------------- */

typedef struct bgode_tableau bgode_tableau;

bgode_status bgode_tableau_classical4(bgode_tableau** out);
bgode_status bgode_tableau_trapezoidal2(bgode_tableau** out);
/* Parses "key=value" lines with keys order,a,b,c,d,p,q,p1,p2,q1..q5. */
bgode_status bgode_tableau_parse(const char* text, bgode_tableau** out);
void bgode_tableau_free(bgode_tableau* t);

/* Order-condition report. Conditions are indexed 0..count-1; each has a
 * human-readable name, a residual, and a pass flag (residual < 1e-12). */
int bgode_tableau_condition_count(const bgode_tableau* t);
bgode_status bgode_tableau_condition(const bgode_tableau* t, int i,
                                     char* name_buf, size_t name_cap,
                                     double* residual, int* pass);
/* 1 when every condition passes. */
int bgode_tableau_ok(const bgode_tableau* t);

/* ---------------- benchmark problems and solving ---------------- */

typedef struct bgode_problem bgode_problem;

/* name: log_example | sqrt_example | tumor. Parameter overrides are parallel
 * key/value arrays (tumor accepts r1, r2, K, a, b, alpha, x1, y1; the scalar
 * problems accept none); pass n_params = 0 for defaults. */
bgode_status bgode_problem_open(const char* name, const char* const* param_keys,
                                const double* param_values, int n_params,
                                bgode_problem** out);
void bgode_problem_free(bgode_problem* p);
int bgode_problem_dim(const bgode_problem* p);
double bgode_problem_x0(const bgode_problem* p);
double bgode_problem_default_h(const bgode_problem* p);
int bgode_problem_default_steps(const bgode_problem* p);
int bgode_problem_report_point_count(const bgode_problem* p);
bgode_status bgode_problem_report_point(const bgode_problem* p, int i,
                                        double* out);

typedef struct bgode_trajectory bgode_trajectory;

/* Fixed-step march. method: "brk2" | "brk4" | "rk4"; tableau may be NULL for
 * the method's default parameters. */
bgode_status bgode_solve(const bgode_problem* p, const char* method, double h,
                         int n_steps, const bgode_tableau* tableau,
                         bgode_trajectory** out);
void bgode_trajectory_free(bgode_trajectory* t);
size_t bgode_trajectory_size(const bgode_trajectory* t);
int bgode_trajectory_dim(const bgode_trajectory* t);
/* y_out receives dim values. */
bgode_status bgode_trajectory_point(const bgode_trajectory* t, size_t k,
                                    double* x_out, double* y_out);
/* Intervals advanced by the classical fallback when the root guard fired. */
int bgode_trajectory_fallback_count(const bgode_trajectory* t);
bgode_status bgode_trajectory_fallback_span(const bgode_trajectory* t, int i,
                                            double* lo, double* hi);

/* ---------------- benchmark reports ---------------- */

typedef struct bgode_report bgode_report;

/* Solves and tabulates numeric vs reference values with relative errors at
 * report_points (NULL/0 selects every grid point). Reference values come
 * from the exact solution, or from a self-generated fine-step run for the
 * tumor model. */
bgode_status bgode_run_table(const bgode_problem* p, const char* method,
                             double h, int n_steps,
                             const double* report_points, int n_points,
                             const bgode_tableau* tableau, bgode_report** out);
void bgode_report_free(bgode_report* r);
int bgode_report_row_count(const bgode_report* r);
int bgode_report_dim(const bgode_report* r);
double bgode_report_wall_time(const bgode_report* r);
/* Arrays receive dim values each. */
bgode_status bgode_report_row(const bgode_report* r, int i, double* x,
                              double* y_num, double* y_ref, double* rel_err);
/* format: "csv" | "json" | "markdown"; path "-" writes to stdout. */
bgode_status bgode_report_emit(const bgode_report* r, const char* format,
                               const char* path);
/* Rebuilds a report from its json rendering. */
bgode_status bgode_report_parse_json(const char* text, bgode_report** out);

/* Endpoint-error power fit over a step-size ladder (>= 3 entries, each
 * reaching the endpoint exactly). errs_out, when non-NULL, receives the n_h
 * per-ladder endpoint errors. */
bgode_status bgode_convergence_study(const bgode_problem* p,
                                     const char* method, const double* h_list,
                                     int n_h, double endpoint,
                                     double* slope_out, double* errs_out);

/* Median march wall time and endpoint error for every (method, h) pair;
 * methods is a comma-separated list. Writes CSV columns
 * method,h,median_seconds,rel_err to csv_path ("-" for stdout). */
bgode_status bgode_time_vs_error(const bgode_problem* p,
                                 const char* methods_csv, const double* h_list,
                                 int n_h, double endpoint, int repeats,
                                 const char* csv_path);

#ifdef __cplusplus
}
#endif

#endif /* BGODE_H */
