#pragma once

#include <cstdint>

namespace bgode {

// Largest n for which every unsigned Stirling number of the first kind s(n, j)
// fits in 64 bits (s(20, 1) = 19!). Larger n must go through the scaled-series
// path below, which never materializes the raw integers.
inline constexpr int stirling_exact_max_n = 20;

// Unsigned Stirling number of the first kind s(n, j) as an exact integer via
// the recurrence s(n+1, j) = n*s(n, j) + s(n, j-1).
// Throws invalid_argument for j > n or negative arguments, overflow for
// n > stirling_exact_max_n.
std::uint64_t stirling_unsigned(int n, int j);

// Truncated generating series sum_{j=m}^{N} (-1)^(j-m) s(j, m) u^j / j!,
// which converges to (ln(1+u))^m / m!. Evaluated with a recurrence on the
// scaled terms s(j, m) u^j / j! directly, so N is not limited by the exact
// integer range. Requires |u| < 1 and 0 <= m <= N.
double stirling_log_series(int m, double u, int N);

}  // namespace bgode
