#pragma once

#include <string>
#include <vector>

namespace bgode {

// Parameter set for the multiplicative Runge-Kutta steppers. Order 2 uses
// {a, b, p, q}; order 4 uses all thirteen fields.
struct bg_tableau {
    int order = 4;
    double a = 0, b = 0, c = 0, d = 0;
    double p = 0, q = 0, p1 = 0, p2 = 0;
    double q1 = 0, q2 = 0, q3 = 0, q4 = 0, q5 = 0;

    // Classical weights: a=d=1/6, b=c=1/3, stages at the interval midpoint and
    // endpoint (p=q=p1=q2=1/2, p2=q5=1, q1=q3=q4=0).
    static bg_tableau classical4();
    // Trapezoidal order-2 set a=b=1/2, p=q=1.
    static bg_tableau trapezoidal2();
    // Alternative valid order-4 set with 1/8-3/8 weights and thirds abscissae;
    // used by the family-invariance tests.
    static bg_tableau three_eighths4();
};

// One order condition with its residual; residuals below tol pass.
struct tableau_condition {
    std::string name;
    double residual = 0.0;
    bool pass = false;
};

struct tableau_report {
    std::vector<tableau_condition> conditions;
    bool ok = false;
};

inline constexpr double tableau_tolerance = 1e-12;

// Evaluates every order condition for t.order and reports the residuals.
// Never throws; failures are carried in the report.
tableau_report validate_tableau(const bg_tableau& t);

// validate_tableau that throws invalid_argument when any condition fails;
// steppers call this before using a tableau.
void require_valid(const bg_tableau& t);

// Parses a plain-text tableau file: one key=value per line, keys from
// {order, a, b, c, d, p, q, p1, p2, q1, q2, q3, q4, q5}. Blank lines and
// lines starting with '#' are skipped. Missing keys default to 0 and
// order defaults to 4.
bg_tableau parse_tableau_text(const std::string& text);

}  // namespace bgode
