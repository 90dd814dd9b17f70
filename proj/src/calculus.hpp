#pragma once

#include <functional>
#include <vector>

namespace bgode {

// Strictly positive scalar function on a positive domain.
using scalar_fn = std::function<double(double)>;

// Default multiplicative stencil width for first-order derivatives.
inline constexpr double default_h0 = 1e-5;

// Bigeometric derivative exp(x * (ln f)'(x)), approximated by a central
// difference of ln f on the multiplicative stencil x*(1 - h0), x*(1 + h0).
// Truncation error is O(h0^2). Throws on x <= 0 or a non-positive probe.
double bg_derivative(const scalar_fn& f, double x, double h0 = default_h0);

// Raw limit-definition quotient (f((1+h)x)/f(x))^(1/h) at finite h; used by
// tests to cross-check bg_derivative against the defining limit.
double bg_limit_quotient(const scalar_fn& f, double x, double h);

// Bigeometric derivative of f evaluated at point t but with the multiplier
// taken at x: exp(x * (ln f)'(t)). The chain-rule identities hold in exactly
// this outer-multiplier form; equals bg_derivative when t == x.
double bg_derivative_at(const scalar_fn& f, double t, double x,
                        double h0 = default_h0);

// Tower of iterated bigeometric derivatives f, f^pi, f^pipi, ... at one point.
// Stored in log space; values() exponentiates on demand.
class deriv_stack {
  public:
    // Level-0 log is ln f(x); level i applies a central difference to the
    // previous level with width h0 * 10^(i/2) (wider at higher levels to damp
    // roundoff amplification).
    deriv_stack(const scalar_fn& f, double x, int order,
                double h0 = default_h0);

    double x() const noexcept { return x_; }
    int order() const noexcept { return order_; }

    // log of the i-th entry, i in [0, order]; entry 0 is ln f(x).
    double log_value(int i) const;
    // i-th entry itself, exp(log_value(i)); strictly positive by construction.
    double value(int i) const;
    std::vector<double> values() const;

  private:
    double x_;
    int order_;
    std::vector<double> logs_;
};

// n-th geometric (multiplicative) derivative rebuilt from the bigeometric
// tower: ( prod_j (f^pi(j))^(+-s(n,j)) )^(1/x^n) with unsigned Stirling
// numbers of the first kind and alternating signs (-1)^(n-j).
// Requires 1 <= n <= stack.order().
double geometric_from_bigeometric(const deriv_stack& stack, int n);

// Degree-n bigeometric Taylor polynomial at x+h:
// prod_i (f^pi(i)(x))^(L^i / i!) with L = ln(1 + h/x), accumulated in log
// space. Requires 1 + h/x > 0.
double bg_taylor_eval(const deriv_stack& stack, double h);

}  // namespace bgode
