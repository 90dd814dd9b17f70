#pragma once

#include <vector>

#include "ivp.hpp"
#include "tableau.hpp"

namespace bgode {

// Scratch buffers shared across steps so the march never allocates.
struct step_workspace {
    std::vector<double> g0, g1, g2, g3, stage_y;

    explicit step_workspace(int dim)
        : g0(static_cast<std::size_t>(dim)),
          g1(static_cast<std::size_t>(dim)),
          g2(static_cast<std::size_t>(dim)),
          g3(static_cast<std::size_t>(dim)),
          stage_y(static_cast<std::size_t>(dim)) {}
};

// One multiplicative order-2 step from (x, y) with width h:
//   g0 = g(x, y); g1 = g(x + p h, y * exp(h q g0 / x));
//   y_out = y * exp((a g0 + b g1) ln(1 + h/x)).
// g0_precomputed, when non-null, supplies g(x, y) (the guard already evaluated
// it). Requires 1 + h/x > 0 and positive y. Throws step_failure on a
// non-finite stage value.
void brk2_step(const rhs_log& rhs, const bg_tableau& t, double x,
               const double* y, double h, double* y_out, step_workspace& ws,
               const double* g0_precomputed = nullptr);

// Four-stage multiplicative step; stage offsets h*(...)/x in the exponent and
// the update exponent scaled by ln(1 + h/x).
void brk4_step(const rhs_log& rhs, const bg_tableau& t, double x,
               const double* y, double h, double* y_out, step_workspace& ws,
               const double* g0_precomputed = nullptr);

// Classical four-stage step y + h/6 (k1 + 2k2 + 2k3 + k4) on the ordinary
// form; the comparison baseline and the guard fallback.
void rk4_step(const rhs_ordinary& rhs, double x, const double* y, double h,
              double* y_out, step_workspace& ws);

// Ordinary to multiplicative form: g = x f / y componentwise (F = exp(x y'/y)).
rhs_log convert_ordinary_to_bg(const rhs_ordinary& f);
// Inverse map g ==> f = y g / x. Requires x > 0 at call time.
rhs_ordinary convert_bg_to_ordinary(const rhs_log& g);

}  // namespace bgode
