#pragma once

// Shared numeric helpers for the test binaries (doctest-free so the
// acceptance runner can use them too).

#include <cmath>
#include <cstddef>
#include <vector>

namespace testutil {

inline double rel_diff(double a, double b) {
    return std::fabs(a - b) / std::fabs(b);
}

// Least-squares slope of ln(err) vs ln(h); non-positive errors are skipped.
inline double fit_slope(const std::vector<double>& hs,
                        const std::vector<double>& errs) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t i = 0; i < hs.size(); ++i) {
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

}  // namespace testutil
