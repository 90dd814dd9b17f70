#include "calculus.hpp"

#include <cmath>

#include "error.hpp"
#include "stirling.hpp"

namespace bgode {

namespace {

// ln f(t) with domain diagnostics; every probe of a positive function passes
// through here.
double log_probe(const scalar_fn& f, double t) {
    if (!(t > 0.0)) {
        fail(status::domain, "probe point " + std::to_string(t) +
                                 " is outside the positive domain");
    }
    const double v = f(t);
    if (!(v > 0.0) || !std::isfinite(v)) {
        fail(status::domain, "function value " + std::to_string(v) + " at x=" +
                                 std::to_string(t) + " is not a positive real");
    }
    return std::log(v);
}

void check_h0(double h0) {
    if (!(h0 > 0.0) || !(h0 < 1.0)) {
        fail(status::invalid_argument,
             "stencil width h0 must lie in (0, 1), got " + std::to_string(h0));
    }
}

}  // namespace

double bg_derivative(const scalar_fn& f, double x, double h0) {
    check_h0(h0);
    if (!(x > 0.0)) {
        fail(status::domain, "bigeometric derivative requires x > 0, got " +
                                 std::to_string(x));
    }
    const double hi = log_probe(f, x * (1.0 + h0));
    const double lo = log_probe(f, x * (1.0 - h0));
    // (hi - lo) / (2 h0) approximates x * (ln f)'(x).
    return std::exp((hi - lo) / (2.0 * h0));
}

double bg_limit_quotient(const scalar_fn& f, double x, double h) {
    if (h == 0.0) {
        fail(status::invalid_argument, "limit quotient needs h != 0");
    }
    if (!(x > 0.0)) {
        fail(status::domain, "limit quotient requires x > 0");
    }
    const double num = log_probe(f, (1.0 + h) * x);
    const double den = log_probe(f, x);
    return std::exp((num - den) / h);
}

double bg_derivative_at(const scalar_fn& f, double t, double x, double h0) {
    // exp(x (ln f)'(t)) = bg_derivative(f, t)^(x/t).
    check_h0(h0);
    if (!(t > 0.0)) {
        fail(status::domain, "evaluation point must be positive, got " +
                                 std::to_string(t));
    }
    const double hi = log_probe(f, t * (1.0 + h0));
    const double lo = log_probe(f, t * (1.0 - h0));
    return std::exp((x / t) * (hi - lo) / (2.0 * h0));
}

deriv_stack::deriv_stack(const scalar_fn& f, double x, int order, double h0)
    : x_(x), order_(order) {
    check_h0(h0);
    if (!(x > 0.0)) {
        fail(status::domain, "derivative stack requires x > 0, got " +
                                 std::to_string(x));
    }
    if (order < 0) {
        fail(status::invalid_argument, "stack order must be >= 0, got " +
                                           std::to_string(order));
    }

    // phi_0(t) = ln f(t); phi_i(t) = (phi_{i-1}(t(1+d)) - phi_{i-1}(t(1-d))) / (2d)
    // so that phi_i(t) = ln f^pi(i)(t). Each level uses its own width
    // d_i = h0 * 10^(i/2); the recursion re-expands lower levels at shifted
    // abscissae, costing 2^order leaf evaluations of ln f.
    std::function<double(int, double)> phi = [&](int level, double t) -> double {
        if (level == 0) {
            return log_probe(f, t);
        }
        const double d = h0 * std::pow(10.0, 0.5 * level);
        return (phi(level - 1, t * (1.0 + d)) - phi(level - 1, t * (1.0 - d))) /
               (2.0 * d);
    };

    logs_.reserve(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) {
        logs_.push_back(phi(i, x));
    }
}

double deriv_stack::log_value(int i) const {
    if (i < 0 || i > order_) {
        fail(status::invalid_argument,
             "stack index " + std::to_string(i) + " outside [0, " +
                 std::to_string(order_) + "]");
    }
    return logs_[static_cast<std::size_t>(i)];
}

double deriv_stack::value(int i) const { return std::exp(log_value(i)); }

std::vector<double> deriv_stack::values() const {
    std::vector<double> out;
    out.reserve(logs_.size());
    for (double lg : logs_) {
        out.push_back(std::exp(lg));
    }
    return out;
}

double geometric_from_bigeometric(const deriv_stack& stack, int n) {
    if (n < 1) {
        fail(status::invalid_argument,
             "geometric derivative order must be >= 1, got " + std::to_string(n));
    }
    if (n > stack.order()) {
        fail(status::invalid_argument,
             "requested order " + std::to_string(n) + " exceeds stack order " +
                 std::to_string(stack.order()));
    }
    // exponent = (1/x^n) * sum_j (-1)^(n-j) s(n,j) ln f^pi(j); the Stirling
    // weights must be exact integers, hence the table lookup.
    double total = 0.0;
    for (int j = 1; j <= n; ++j) {
        const double weight = static_cast<double>(stirling_unsigned(n, j));
        const double sign = ((n - j) % 2 == 0) ? 1.0 : -1.0;
        total += sign * weight * stack.log_value(j);
    }
    return std::exp(total / std::pow(stack.x(), n));
}

double bg_taylor_eval(const deriv_stack& stack, double h) {
    const double ratio = h / stack.x();
    if (!(1.0 + ratio > 0.0)) {
        fail(status::domain, "taylor evaluation needs 1 + h/x > 0, got h/x = " +
                                 std::to_string(ratio));
    }
    const double L = std::log1p(ratio);
    // log of the product: sum_i ln f^pi(i) * L^i / i!, accumulated with an
    // incrementally built L^i / i! factor.
    double term = 1.0;
    double total = 0.0;
    for (int i = 0; i <= stack.order(); ++i) {
        if (i > 0) {
            term *= L / static_cast<double>(i);
        }
        total += stack.log_value(i) * term;
    }
    return std::exp(total);
}

}  // namespace bgode
