#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bgode {

// Multiplicative right-hand side stored in log form: component i of g is
// ln F_i(x, y), where F_i is the multiplicative growth factor of component i.
// Writes dim values into g_out.
struct rhs_log {
    int dim = 1;
    std::function<void(double x, const double* y, double* g_out)> g;
};

// Ordinary-calculus right-hand side y' = f(x, y).
struct rhs_ordinary {
    int dim = 1;
    std::function<void(double x, const double* y, double* f_out)> f;
};

// Exact solution sampler, writing dim components at abscissa x.
using exact_fn = std::function<void(double x, double* y_out)>;

// Initial value problem with the RHS in log-multiplicative form, an optional
// ordinary form (used by the classical reference stepper and the root-crossing
// fallback), and an optional exact solution.
struct ivp_spec {
    int dim = 1;
    rhs_log rhs;
    std::optional<rhs_ordinary> ordinary;
    double x0 = 1.0;
    std::vector<double> y0;
    std::optional<exact_fn> exact;
};

enum class method_kind { brk2, brk4, rk4 };

const char* method_name(method_kind m) noexcept;
// Parses "brk2" / "brk4" / "rk4" (case-insensitive); throws lookup on others.
method_kind parse_method(const std::string& name);

// Root-crossing guard for the multiplicative steppers: when a component is
// already below epsilon, or the ordinary form predicts a sign change within
// the step, the solver switches to the classical stepper on the ordinary form
// across [x, x+2h].
struct root_guard_config {
    bool enabled = true;
    double epsilon = 1e-8;
    // When the problem carries no ordinary form, the guard may derive one from
    // the log form (f = y*g/x). Disabling that makes a triggered guard a
    // configuration error instead.
    bool allow_converted_fallback = true;
};

struct trajectory {
    method_kind method = method_kind::brk4;
    double h = 0.0;
    int dim = 1;
    std::vector<double> xs;
    std::vector<double> ys;  // row-major: ys[k*dim + i]
    // Intervals where the classical fallback advanced the solution.
    std::vector<std::pair<double, double>> fallback_spans;

    std::size_t size() const noexcept { return xs.size(); }
    const double* y_at(std::size_t k) const {
        return ys.data() + k * static_cast<std::size_t>(dim);
    }
    bool in_fallback_span(double x) const noexcept {
        for (const auto& [lo, hi] : fallback_spans) {
            if (x >= lo && x <= hi) return true;
        }
        return false;
    }
};

}  // namespace bgode
