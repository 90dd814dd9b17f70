#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "calculus.hpp"
#include "doctest.h"
#include "error.hpp"

using namespace bgode;

namespace {

double rel_diff(double a, double b) {
    return std::fabs(a - b) / std::fabs(b);
}

double fit_slope(const std::vector<double>& hs,
                 const std::vector<double>& errs) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (size_t i = 0; i < hs.size(); ++i) {
        if (!(errs[i] > 0)) continue;
        double lx = std::log(hs[i]), ly = std::log(errs[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// Smooth strictly positive functions on (0, inf) with analytic ordinary
// derivatives, used as raw material for the rule suite.
struct fn_entry {
    scalar_fn f;
    scalar_fn df;  // ordinary derivative
};

const std::vector<fn_entry>& pool() {
    static const std::vector<fn_entry> fns = {
        {[](double x) { return 2.0 + std::sin(x); },
         [](double x) { return std::cos(x); }},
        {[](double x) { return std::exp(0.3 * x); },
         [](double x) { return 0.3 * std::exp(0.3 * x); }},
        {[](double x) { return std::pow(x, 1.7); },
         [](double x) { return 1.7 * std::pow(x, 0.7); }},
        {[](double x) { return 1.0 / (1.0 + x * x); },
         [](double x) {
             double d = 1.0 + x * x;
             return -2.0 * x / (d * d);
         }},
        {[](double x) { return x - std::log(x); },
         [](double x) { return 1.0 - 1.0 / x; }},
    };
    return fns;
}

}  // namespace

TEST_CASE("first derivative closed forms") {
    // Power functions: the multiplicative derivative of x^k is the constant
    // e^k, because x (ln x^k)' = k.
    scalar_fn cube = [](double x) { return x * x * x; };
    CHECK(rel_diff(bg_derivative(cube, 2.0), std::exp(3.0)) < 1e-9);
    scalar_fn powneg = [](double x) { return std::pow(x, -1.2); };
    CHECK(rel_diff(bg_derivative(powneg, 2.0), std::exp(-1.2)) < 1e-9);

    // For e^x the multiplicative derivative equals e^x itself.
    scalar_fn ex = [](double x) { return std::exp(x); };
    CHECK(rel_diff(bg_derivative(ex, 1.5), std::exp(1.5)) < 1e-10);

    // f = x - ln x at x = 2: exp(x f'/f) = exp(1/(2 - ln 2)).
    scalar_fn xlx = [](double x) { return x - std::log(x); };
    double closed = std::exp(1.0 / (2.0 - std::log(2.0)));
    CHECK(rel_diff(bg_derivative(xlx, 2.0), closed) < 1e-9);

    // The finite-h defining quotient approaches the same value.
    CHECK(rel_diff(bg_limit_quotient(xlx, 2.0, 1e-6), closed) < 1e-5);
    CHECK(rel_diff(bg_limit_quotient(xlx, 2.0, -1e-6), closed) < 1e-5);
}

TEST_CASE("derivative domain and argument errors") {
    scalar_fn ex = [](double x) { return std::exp(x); };
    scalar_fn dips = [](double x) { return x - 1.05; };  // negative below 1.05
    CHECK_THROWS_AS(bg_derivative(ex, 0.0), error);
    CHECK_THROWS_AS(bg_derivative(ex, -2.0), error);
    CHECK_THROWS_AS(bg_derivative(dips, 1.05), error);  // probe hits f <= 0
    CHECK_THROWS_AS(bg_derivative(ex, 1.0, 0.0), error);
    CHECK_THROWS_AS(bg_derivative(ex, 1.0, 2.0), error);
    CHECK_THROWS_AS(bg_limit_quotient(ex, 1.0, 0.0), error);
    CHECK_THROWS_AS(bg_limit_quotient(ex, -1.0, 0.1), error);
    try {
        bg_derivative(ex, -2.0);
    } catch (const error& e) {
        CHECK(e.code() == status::domain);
    }
}

TEST_CASE("derivative stack towers") {
    SUBCASE("power function tower is [x^k, e^k, 1]") {
        double k = 2.0;
        scalar_fn f = [k](double x) { return std::pow(x, k); };
        deriv_stack st(f, 3.0, 2);
        auto v = st.values();
        REQUIRE(v.size() == 3);
        CHECK(rel_diff(v[0], std::pow(3.0, k)) < 1e-12);
        CHECK(rel_diff(v[1], std::exp(k)) < 1e-9);
        CHECK(rel_diff(v[2], 1.0) < 1e-6);
    }
    SUBCASE("exponential tower is constant") {
        scalar_fn f = [](double x) { return std::exp(x); };
        deriv_stack st(f, 1.0, 3);
        auto v = st.values();
        REQUIRE(v.size() == 4);
        for (double e : v) CHECK(rel_diff(e, std::exp(1.0)) < 1e-5);
        for (double e : v) CHECK(e > 0.0);
    }
    SUBCASE("x - ln x tower matches high-precision reference") {
        scalar_fn f = [](double x) { return x - std::log(x); };
        deriv_stack st(f, 2.0, 2);
        CHECK(rel_diff(st.value(0), 1.3068528194400547) < 1e-12);
        CHECK(rel_diff(st.value(1), 2.1494180036482655) < 1e-8);
        CHECK(rel_diff(st.value(2), 2.5724727673887192) < 1e-6);
        // Third level needs the wider stencil to stay accurate.
        deriv_stack st3(f, 2.0, 3, 2e-5);
        CHECK(rel_diff(st3.value(3), 0.33733494822140347) < 1e-5);
    }
    SUBCASE("stack argument errors") {
        scalar_fn f = [](double x) { return std::exp(x); };
        CHECK_THROWS_AS(deriv_stack(f, -1.0, 2), error);
        CHECK_THROWS_AS(deriv_stack(f, 1.0, -1), error);
        deriv_stack st(f, 1.0, 2);
        CHECK_THROWS_AS(st.value(3), error);
        CHECK_THROWS_AS(st.value(-1), error);
        CHECK(st.order() == 2);
    }
}

TEST_CASE("nth geometric derivative assembled from the tower") {
    SUBCASE("first order reduces to the 1/x root") {
        for (const auto& e : pool()) {
            deriv_stack st(e.f, 1.9, 1);
            double direct = std::pow(st.value(1), 1.0 / 1.9);
            CHECK(rel_diff(geometric_from_bigeometric(st, 1), direct) < 1e-13);
        }
    }
    SUBCASE("power function second order") {
        double k = 2.0;
        scalar_fn f = [k](double x) { return std::pow(x, k); };
        deriv_stack st(f, 2.0, 2);
        // Direct nested form: exp(d/dx (k/x)) = e^(-k/x^2) = e^(-k/4) at x=2.
        CHECK(rel_diff(geometric_from_bigeometric(st, 2), std::exp(-k / 4.0)) <
              1e-6);
    }
    SUBCASE("argument errors") {
        scalar_fn f = [](double x) { return std::exp(x); };
        deriv_stack st(f, 1.0, 2);
        CHECK_THROWS_AS(geometric_from_bigeometric(st, 0), error);
        CHECK_THROWS_AS(geometric_from_bigeometric(st, 3), error);
    }
}

TEST_CASE("tower-based geometric derivatives equal nested closed forms") {
    // The n-th nested geometric derivative is exp(l^(n-1)(x)) where
    // l = (ln f)'; each probe below carries l, l', l'' analytically, so the
    // only approximation under test is the tower's finite differencing.
    struct probe {
        scalar_fn f;
        double x;
        double l0, l1, l2;
    };
    double k = 2.5;
    double xb = 2.0, xc = 2.0, xd = 4.0;
    double u = 1 - 1.0 / xc, v = xc - std::log(xc);
    double up = 1.0 / (xc * xc), upp = -2.0 / (xc * xc * xc);
    double l0 = u / v;
    double l1 = up / v - l0 * l0;
    double l2 = upp / v - up * u / (v * v) - 2 * l0 * l1;
    std::vector<probe> probes = {
        {[](double x) { return std::exp(x); }, 1.3, 1.0, 0.0, 0.0},
        {[k](double x) { return std::pow(x, k); }, xb, k / xb, -k / (xb * xb),
         2 * k / (xb * xb * xb)},
        {[](double x) { return x - std::log(x); }, xc, l0, l1, l2},
        {[](double x) { return std::sqrt(1 + x); }, xd, 0.5 / (1 + xd),
         -0.5 / ((1 + xd) * (1 + xd)), 1.0 / ((1 + xd) * (1 + xd) * (1 + xd))},
    };
    for (const auto& p : probes) {
        deriv_stack st(p.f, p.x, 3, 2e-5);
        double oracle[3] = {std::exp(p.l0), std::exp(p.l1), std::exp(p.l2)};
        for (int n = 1; n <= 3; ++n) {
            INFO("n = " << n);
            CHECK(rel_diff(geometric_from_bigeometric(st, n), oracle[n - 1]) <
                  1e-5);
        }
    }
}

TEST_CASE("taylor polynomial evaluation") {
    SUBCASE("order zero returns f(x)") {
        scalar_fn f = [](double x) { return 2.0 + std::sin(x); };
        deriv_stack st(f, 1.7, 0);
        CHECK(bg_taylor_eval(st, 0.4) == doctest::Approx(f(1.7)).epsilon(1e-14));
    }
    SUBCASE("power functions are reproduced exactly at order one") {
        double kk = 1.8;
        scalar_fn f = [kk](double x) { return std::pow(x, kk); };
        deriv_stack st(f, 2.0, 1);
        for (double h : {0.25, 1.0, -0.9, 5.0}) {
            CHECK(rel_diff(bg_taylor_eval(st, h), std::pow(2.0 + h, kk)) <
                  1e-9);
        }
    }
    SUBCASE("degree three approximates x - ln x nearby") {
        scalar_fn f = [](double x) { return x - std::log(x); };
        deriv_stack st(f, 2.0, 3);
        double approx = bg_taylor_eval(st, 0.1);
        CHECK(rel_diff(approx, 1.3580631027910699) < 1e-6);
        CHECK(rel_diff(approx, f(2.1)) < 2e-6);
    }
    SUBCASE("domain error when 1 + h/x <= 0") {
        scalar_fn f = [](double x) { return std::exp(x); };
        deriv_stack st(f, 2.0, 1);
        CHECK_THROWS_AS(bg_taylor_eval(st, -2.0), error);
        CHECK_THROWS_AS(bg_taylor_eval(st, -2.5), error);
        CHECK_NOTHROW(bg_taylor_eval(st, -1.9));
    }
}

TEST_CASE("taylor remainder decays at the polynomial order") {
    scalar_fn f = [](double x) { return x - std::log(x); };
    std::vector<double> hs = {0.4, 0.2, 0.1, 0.05, 0.025};
    for (int n = 1; n <= 3; ++n) {
        deriv_stack st(f, 2.0, n);
        std::vector<double> errs;
        for (double h : hs)
            errs.push_back(rel_diff(bg_taylor_eval(st, h), f(2.0 + h)));
        double slope = fit_slope(hs, errs);
        INFO("degree " << n << " fitted decay exponent " << slope);
        CHECK(slope >= n + 0.7);
        CHECK(slope <= n + 1.5);
    }
}

TEST_CASE("differentiation rule suite at random samples") {
    std::mt19937_64 rng(20260823u);
    std::uniform_real_distribution<double> xs(1.2, 2.8);
    std::uniform_real_distribution<double> cs(0.2, 5.0);
    auto& fns = pool();
    auto pick = [&](void) -> const fn_entry& {
        return fns[rng() % fns.size()];
    };
    constexpr double tol = 1e-6;
    constexpr int samples = 100;

    SUBCASE("constant multiples drop out") {
        for (int i = 0; i < samples; ++i) {
            double x = xs(rng), c = cs(rng);
            const auto& e = pick();
            scalar_fn scaled = [&e, c](double t) { return c * e.f(t); };
            CHECK(rel_diff(bg_derivative(scaled, x), bg_derivative(e.f, x)) <
                  tol);
        }
    }
    SUBCASE("products multiply") {
        for (int i = 0; i < samples; ++i) {
            double x = xs(rng);
            const auto& ea = pick();
            const auto& eb = pick();
            scalar_fn prod = [&](double t) { return ea.f(t) * eb.f(t); };
            CHECK(rel_diff(bg_derivative(prod, x),
                           bg_derivative(ea.f, x) * bg_derivative(eb.f, x)) <
                  tol);
        }
    }
    SUBCASE("quotients divide") {
        for (int i = 0; i < samples; ++i) {
            double x = xs(rng);
            const auto& ea = pick();
            const auto& eb = pick();
            scalar_fn quot = [&](double t) { return ea.f(t) / eb.f(t); };
            CHECK(rel_diff(bg_derivative(quot, x),
                           bg_derivative(ea.f, x) / bg_derivative(eb.f, x)) <
                  tol);
        }
    }
    SUBCASE("functional powers") {
        // (f^p)^deriv = deriv(f)^p(x) * f(x)^(x p'(x)) for a smooth exponent
        // function p.
        struct exponent {
            scalar_fn p, dp;
        };
        std::vector<exponent> exps = {
            {[](double x) { return 0.5 * x; }, [](double) { return 0.5; }},
            {[](double x) { return std::sin(x); },
             [](double x) { return std::cos(x); }},
            {[](double x) { return std::log(1.0 + x); },
             [](double x) { return 1.0 / (1.0 + x); }},
        };
        for (int i = 0; i < samples; ++i) {
            double x = xs(rng);
            const auto& e = pick();
            const auto& pw = exps[rng() % exps.size()];
            scalar_fn powered = [&](double t) {
                return std::pow(e.f(t), pw.p(t));
            };
            double rhs = std::pow(bg_derivative(e.f, x), pw.p(x)) *
                         std::pow(e.f(x), x * pw.dp(x));
            CHECK(rel_diff(bg_derivative(powered, x), rhs) < tol);
        }
    }
    SUBCASE("composition") {
        // deriv(f o g)(x) = [exp(x (ln f)'(g(x)))]^(g'(x)): the derivative of
        // the outer function is taken at the inner point g(x) while the
        // multiplier stays the outer abscissa x.
        struct inner {
            scalar_fn g, dg;
        };
        std::vector<inner> inners = {
            {[](double x) { return 0.5 * x * x + 0.3; },
             [](double x) { return x; }},
            {[](double x) { return std::exp(0.4 * x); },
             [](double x) { return 0.4 * std::exp(0.4 * x); }},
            {[](double x) { return 1.0 + 0.5 * std::sin(x); },
             [](double x) { return 0.5 * std::cos(x); }},
            {[](double x) { return 3.0 / x; },
             [](double x) { return -3.0 / (x * x); }},
        };
        for (int i = 0; i < samples; ++i) {
            double x = xs(rng);
            const auto& e = pick();
            const auto& in = inners[rng() % inners.size()];
            scalar_fn composed = [&](double t) { return e.f(in.g(t)); };
            double rhs =
                std::pow(bg_derivative_at(e.f, in.g(x), x), in.dg(x));
            CHECK(rel_diff(bg_derivative(composed, x), rhs) < tol);
        }
    }
    SUBCASE("sums blend by relative weight") {
        for (int i = 0; i < samples; ++i) {
            double x = xs(rng);
            const auto& ea = pick();
            const auto& eb = pick();
            scalar_fn sum = [&](double t) { return ea.f(t) + eb.f(t); };
            double wa = ea.f(x) / (ea.f(x) + eb.f(x));
            double wb = eb.f(x) / (ea.f(x) + eb.f(x));
            double rhs = std::pow(bg_derivative(ea.f, x), wa) *
                         std::pow(bg_derivative(eb.f, x), wb);
            CHECK(rel_diff(bg_derivative(sum, x), rhs) < tol);
        }
    }
    SUBCASE("two-variable composition") {
        // G(t) = F(y(t), z(t)); the derivative factors into the partial
        // multiplicative derivatives along each slice (again with outer
        // multiplier t) raised to the ordinary derivatives of the paths.
        for (int i = 0; i < samples; ++i) {
            double t0 = xs(rng);
            double a = 0.3 + 1.2 * (cs(rng) / 5.0);
            double b = 0.3 + 1.2 * (cs(rng) / 5.0);
            double c = 0.2 + 0.8 * (cs(rng) / 5.0);
            auto F = [a, b, c](double y, double z) {
                return std::pow(y, a) * std::pow(z, b) + c;
            };
            auto y = [](double t) { return 1.0 + t * t; };
            auto dy = [](double t) { return 2.0 * t; };
            auto z = [](double t) { return std::exp(0.3 * t); };
            auto dz = [](double t) { return 0.3 * std::exp(0.3 * t); };

            scalar_fn G = [&](double t) { return F(y(t), z(t)); };
            double y0 = y(t0), z0 = z(t0);
            scalar_fn slice_y = [&](double u) { return F(u, z0); };
            scalar_fn slice_z = [&](double w) { return F(y0, w); };
            double rhs = std::pow(bg_derivative_at(slice_y, y0, t0), dy(t0)) *
                         std::pow(bg_derivative_at(slice_z, z0, t0), dz(t0));
            CHECK(rel_diff(bg_derivative(G, t0), rhs) < tol);
        }
    }
}
