#include "steppers.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "error.hpp"

namespace bgode {

namespace {

void check_step_domain(double x, double h) {
    if (!(x > 0.0)) {
        fail(status::domain,
             "multiplicative step requires x > 0, got x=" + std::to_string(x));
    }
    if (!(1.0 + h / x > 0.0)) {
        fail(status::domain, "step requires 1 + h/x > 0, got h/x=" +
                                 std::to_string(h / x));
    }
}

void check_positive_state(const double* y, int dim, double x) {
    for (int i = 0; i < dim; ++i) {
        if (!(y[i] > 0.0)) {
            fail(status::domain, "state component " + std::to_string(i) +
                                     " is not positive at x=" +
                                     std::to_string(x));
        }
    }
}

// Evaluates g into out and rejects non-finite stage values with the stage
// index and location in the message.
void eval_stage(const rhs_log& rhs, int stage, double x, const double* y,
                double* out) {
    rhs.g(x, y, out);
    for (int i = 0; i < rhs.dim; ++i) {
        if (!std::isfinite(out[i])) {
            fail(status::step_failure,
                 "non-finite RHS (component " + std::to_string(i) +
                     ") at stage " + std::to_string(stage) +
                     ", x=" + std::to_string(x));
        }
    }
}

void eval_stage_ordinary(const rhs_ordinary& rhs, int stage, double x,
                         const double* y, double* out) {
    rhs.f(x, y, out);
    for (int i = 0; i < rhs.dim; ++i) {
        if (!std::isfinite(out[i])) {
            fail(status::step_failure,
                 "non-finite ordinary RHS (component " + std::to_string(i) +
                     ") at stage " + std::to_string(stage) +
                     ", x=" + std::to_string(x));
        }
    }
}

}  // namespace

void brk2_step(const rhs_log& rhs, const bg_tableau& t, double x,
               const double* y, double h, double* y_out, step_workspace& ws,
               const double* g0_precomputed) {
    if (t.order != 2) {
        fail(status::invalid_argument, "brk2_step needs an order-2 tableau");
    }
    check_step_domain(x, h);
    check_positive_state(y, rhs.dim, x);
    const int dim = rhs.dim;

    double* g0 = ws.g0.data();
    if (g0_precomputed != nullptr) {
        for (int i = 0; i < dim; ++i) g0[i] = g0_precomputed[i];
    } else {
        eval_stage(rhs, 0, x, y, g0);
    }

    for (int i = 0; i < dim; ++i) {
        ws.stage_y[static_cast<std::size_t>(i)] =
            y[i] * std::exp(h * (t.q * g0[i]) / x);
    }
    eval_stage(rhs, 1, x + t.p * h, ws.stage_y.data(), ws.g1.data());

    const double L = std::log1p(h / x);
    for (int i = 0; i < dim; ++i) {
        y_out[i] = y[i] * std::exp((t.a * g0[i] + t.b * ws.g1[static_cast<std::size_t>(i)]) * L);
    }
}

void brk4_step(const rhs_log& rhs, const bg_tableau& t, double x,
               const double* y, double h, double* y_out, step_workspace& ws,
               const double* g0_precomputed) {
    if (t.order != 4) {
        fail(status::invalid_argument, "brk4_step needs an order-4 tableau");
    }
    check_step_domain(x, h);
    check_positive_state(y, rhs.dim, x);
    const int dim = rhs.dim;
    double* g0 = ws.g0.data();
    double* g1 = ws.g1.data();
    double* g2 = ws.g2.data();
    double* g3 = ws.g3.data();
    double* sy = ws.stage_y.data();

    if (g0_precomputed != nullptr) {
        for (int i = 0; i < dim; ++i) g0[i] = g0_precomputed[i];
    } else {
        eval_stage(rhs, 0, x, y, g0);
    }

    const double hx = h / x;
    for (int i = 0; i < dim; ++i) {
        sy[i] = y[i] * std::exp(hx * (t.q * g0[i]));
    }
    eval_stage(rhs, 1, x + t.p * h, sy, g1);

    for (int i = 0; i < dim; ++i) {
        sy[i] = y[i] * std::exp(hx * (t.q1 * g0[i] + t.q2 * g1[i]));
    }
    eval_stage(rhs, 2, x + t.p1 * h, sy, g2);

    for (int i = 0; i < dim; ++i) {
        sy[i] = y[i] * std::exp(hx * (t.q3 * g0[i] + t.q4 * g1[i] + t.q5 * g2[i]));
    }
    eval_stage(rhs, 3, x + t.p2 * h, sy, g3);

    const double L = std::log1p(hx);
    for (int i = 0; i < dim; ++i) {
        y_out[i] = y[i] * std::exp((t.a * g0[i] + t.b * g1[i] + t.c * g2[i] +
                                    t.d * g3[i]) *
                                   L);
    }
}

void rk4_step(const rhs_ordinary& rhs, double x, const double* y, double h,
              double* y_out, step_workspace& ws) {
    const int dim = rhs.dim;
    double* k1 = ws.g0.data();
    double* k2 = ws.g1.data();
    double* k3 = ws.g2.data();
    double* k4 = ws.g3.data();
    double* sy = ws.stage_y.data();

    eval_stage_ordinary(rhs, 0, x, y, k1);
    for (int i = 0; i < dim; ++i) sy[i] = y[i] + 0.5 * h * k1[i];
    eval_stage_ordinary(rhs, 1, x + 0.5 * h, sy, k2);
    for (int i = 0; i < dim; ++i) sy[i] = y[i] + 0.5 * h * k2[i];
    eval_stage_ordinary(rhs, 2, x + 0.5 * h, sy, k3);
    for (int i = 0; i < dim; ++i) sy[i] = y[i] + h * k3[i];
    eval_stage_ordinary(rhs, 3, x + h, sy, k4);

    for (int i = 0; i < dim; ++i) {
        y_out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
}

rhs_log convert_ordinary_to_bg(const rhs_ordinary& f) {
    rhs_log g;
    g.dim = f.dim;
    g.g = [inner = f](double x, const double* y, double* out) {
        inner.f(x, y, out);
        for (int i = 0; i < inner.dim; ++i) {
            if (y[i] == 0.0) {
                fail(status::domain,
                     "ordinary-to-multiplicative conversion needs nonzero y, "
                     "component " +
                         std::to_string(i) + " at x=" + std::to_string(x));
            }
            out[i] = x * out[i] / y[i];
        }
    };
    return g;
}

rhs_ordinary convert_bg_to_ordinary(const rhs_log& g) {
    rhs_ordinary f;
    f.dim = g.dim;
    f.f = [inner = g](double x, const double* y, double* out) {
        if (x == 0.0) {
            fail(status::domain,
                 "multiplicative-to-ordinary conversion needs x != 0");
        }
        inner.g(x, y, out);
        for (int i = 0; i < inner.dim; ++i) {
            out[i] = y[i] * out[i] / x;
        }
    };
    return f;
}

const char* method_name(method_kind m) noexcept {
    switch (m) {
        case method_kind::brk2: return "brk2";
        case method_kind::brk4: return "brk4";
        case method_kind::rk4: return "rk4";
    }
    return "?";
}

method_kind parse_method(const std::string& name) {
    std::string low;
    low.reserve(name.size());
    for (char ch : name) {
        low.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
    if (low == "brk2") return method_kind::brk2;
    if (low == "brk4") return method_kind::brk4;
    if (low == "rk4") return method_kind::rk4;
    fail(status::lookup, "unknown method '" + name + "' (brk2|brk4|rk4)");
}

}  // namespace bgode
