#include "solve.hpp"

#include <cmath>
#include <string>

#include "error.hpp"

namespace bgode {

namespace {

void check_ivp(const ivp_spec& ivp) {
    if (ivp.dim < 1) {
        fail(status::invalid_argument, "ivp dimension must be >= 1");
    }
    if (static_cast<int>(ivp.y0.size()) != ivp.dim) {
        fail(status::invalid_argument,
             "y0 has " + std::to_string(ivp.y0.size()) +
                 " components, expected " + std::to_string(ivp.dim));
    }
    if (!(ivp.x0 > 0.0)) {
        fail(status::domain, "x0 must be positive, got " +
                                 std::to_string(ivp.x0));
    }
    for (int i = 0; i < ivp.dim; ++i) {
        if (!(ivp.y0[static_cast<std::size_t>(i)] > 0.0)) {
            fail(status::domain,
                 "initial component " + std::to_string(i) + " must be positive");
        }
    }
    if (ivp.rhs.dim != ivp.dim || !ivp.rhs.g) {
        fail(status::invalid_argument, "log-form RHS missing or wrong dimension");
    }
    if (ivp.ordinary && (ivp.ordinary->dim != ivp.dim || !ivp.ordinary->f)) {
        fail(status::invalid_argument,
             "ordinary RHS present but missing callable or wrong dimension");
    }
}

}  // namespace

trajectory solve(const ivp_spec& ivp, method_kind method, double h,
                 int n_steps, const std::optional<bg_tableau>& tableau,
                 const root_guard_config& guard) {
    check_ivp(ivp);
    if (!(h > 0.0)) {
        fail(status::invalid_argument, "step size must be positive, got " +
                                           std::to_string(h));
    }
    if (n_steps < 0) {
        fail(status::invalid_argument, "step count must be >= 0");
    }

    trajectory traj;
    traj.method = method;
    traj.h = h;
    traj.dim = ivp.dim;
    const std::size_t dim = static_cast<std::size_t>(ivp.dim);
    traj.xs.reserve(static_cast<std::size_t>(n_steps) + 1);
    traj.ys.reserve((static_cast<std::size_t>(n_steps) + 1) * dim);

    traj.xs.push_back(ivp.x0);
    traj.ys.insert(traj.ys.end(), ivp.y0.begin(), ivp.y0.end());

    step_workspace ws(ivp.dim);
    std::vector<double> y(ivp.y0);
    std::vector<double> y_next(dim);
    std::vector<double> g0(dim);

    if (method == method_kind::rk4) {
        rhs_ordinary f = ivp.ordinary ? *ivp.ordinary
                                      : convert_bg_to_ordinary(ivp.rhs);
        double x = ivp.x0;
        for (int k = 0; k < n_steps; ++k) {
            try {
                rk4_step(f, x, y.data(), h, y_next.data(), ws);
            } catch (const error& e) {
                fail(e.code(), "step " + std::to_string(k) + ": " + e.what());
            }
            x = ivp.x0 + static_cast<double>(k + 1) * h;
            y.swap(y_next);
            traj.xs.push_back(x);
            traj.ys.insert(traj.ys.end(), y.begin(), y.end());
        }
        return traj;
    }

    const bg_tableau tab = tableau.has_value()
                               ? *tableau
                               : (method == method_kind::brk4
                                      ? bg_tableau::classical4()
                                      : bg_tableau::trapezoidal2());
    require_valid(tab);
    if ((method == method_kind::brk4 && tab.order != 4) ||
        (method == method_kind::brk2 && tab.order != 2)) {
        fail(status::invalid_argument,
             "tableau order " + std::to_string(tab.order) +
                 " does not match method " + method_name(method));
    }

    // Fallback stepper on the ordinary form, materialized lazily on first use.
    std::optional<rhs_ordinary> fallback_f;
    auto fallback_rhs = [&]() -> const rhs_ordinary& {
        if (!fallback_f) {
            if (ivp.ordinary) {
                fallback_f = *ivp.ordinary;
            } else if (guard.allow_converted_fallback) {
                fallback_f = convert_bg_to_ordinary(ivp.rhs);
            } else {
                fail(status::config,
                     "root guard triggered but the problem has no ordinary "
                     "form and conversion is disabled");
            }
        }
        return *fallback_f;
    };

    int k = 0;
    while (k < n_steps) {
        const double x = ivp.x0 + static_cast<double>(k) * h;

        bool use_fallback = false;
        if (guard.enabled) {
            // Trigger 1: a component already at or below the positivity floor.
            for (std::size_t i = 0; i < dim && !use_fallback; ++i) {
                if (y[i] < guard.epsilon) use_fallback = true;
            }
            // Trigger 2: predicted sign change within the step. In log form,
            // y + h f = y (1 + h g / x), so the predictor needs only g(x, y)
            // -- which doubles as stage 0 of the multiplicative step.
            if (!use_fallback) {
                ivp.rhs.g(x, y.data(), g0.data());
                for (std::size_t i = 0; i < dim; ++i) {
                    if (!std::isfinite(g0[i]) ||
                        1.0 + h * g0[i] / x <= 0.0) {
                        use_fallback = true;
                        break;
                    }
                }
            }
        }

        try {
            if (use_fallback) {
                const rhs_ordinary& f = fallback_rhs();
                const int span_steps = (k + 2 <= n_steps) ? 2 : 1;
                for (int s = 0; s < span_steps; ++s) {
                    const double xs = ivp.x0 + static_cast<double>(k + s) * h;
                    rk4_step(f, xs, y.data(), h, y_next.data(), ws);
                    y.swap(y_next);
                    traj.xs.push_back(ivp.x0 +
                                      static_cast<double>(k + s + 1) * h);
                    traj.ys.insert(traj.ys.end(), y.begin(), y.end());
                }
                traj.fallback_spans.emplace_back(
                    x, ivp.x0 + static_cast<double>(k + span_steps) * h);
                k += span_steps;
                continue;
            }

            const double* pre = guard.enabled ? g0.data() : nullptr;
            if (method == method_kind::brk4) {
                brk4_step(ivp.rhs, tab, x, y.data(), h, y_next.data(), ws, pre);
            } else {
                brk2_step(ivp.rhs, tab, x, y.data(), h, y_next.data(), ws, pre);
            }
        } catch (const error& e) {
            fail(e.code(), "step " + std::to_string(k) + ": " + e.what());
        }
        y.swap(y_next);
        ++k;
        traj.xs.push_back(ivp.x0 + static_cast<double>(k) * h);
        traj.ys.insert(traj.ys.end(), y.begin(), y.end());
    }
    return traj;
}

}  // namespace bgode
