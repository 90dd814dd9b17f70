#pragma once

#include <optional>

#include "ivp.hpp"
#include "steppers.hpp"
#include "tableau.hpp"

namespace bgode {

// Fixed-step march over n_steps steps of width h from (x0, y0).
//
// Multiplicative methods check the root guard before every step: if any
// component sits below guard.epsilon, or the ordinary form predicts a sign
// change within the step (y + h f <= 0, evaluated via the log-form identity
// 1 + h g/x <= 0), the march advances with two classical steps across
// [x, x+2h] on the ordinary form and records the span. The classical stepper
// uses ivp.ordinary when present, otherwise the converted log form (unless
// guard.allow_converted_fallback forbids it, which turns a triggered guard
// into a config error).
//
// tableau: defaults to classical4() for brk4 and trapezoidal2() for brk2;
// ignored by rk4. An invalid tableau is rejected up front.
trajectory solve(const ivp_spec& ivp, method_kind method, double h,
                 int n_steps,
                 const std::optional<bg_tableau>& tableau = std::nullopt,
                 const root_guard_config& guard = root_guard_config{});

}  // namespace bgode
