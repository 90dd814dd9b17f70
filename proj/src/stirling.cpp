#include "stirling.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "error.hpp"

namespace bgode {

namespace {

// Triangular table s(n, j) for 0 <= j <= n <= stirling_exact_max_n, built once.
// Row n lives at offset n(n+1)/2.
struct exact_table {
    std::array<std::uint64_t,
               (stirling_exact_max_n + 1) * (stirling_exact_max_n + 2) / 2>
        entries{};

    exact_table() {
        at(0, 0) = 1;
        for (int n = 0; n < stirling_exact_max_n; ++n) {
            for (int j = 0; j <= n + 1; ++j) {
                const std::uint64_t above = (j <= n) ? at(n, j) : 0;
                const std::uint64_t left = (j >= 1) ? at(n, j - 1) : 0;
                at(n + 1, j) = static_cast<std::uint64_t>(n) * above + left;
            }
        }
    }

    std::uint64_t& at(int n, int j) {
        return entries[static_cast<std::size_t>(n * (n + 1) / 2 + j)];
    }
    std::uint64_t get(int n, int j) const {
        return entries[static_cast<std::size_t>(n * (n + 1) / 2 + j)];
    }
};

const exact_table& table() {
    static const exact_table t;
    return t;
}

}  // namespace

std::uint64_t stirling_unsigned(int n, int j) {
    if (n < 0 || j < 0 || j > n) {
        fail(status::invalid_argument,
             "stirling_unsigned needs 0 <= j <= n, got n=" + std::to_string(n) +
                 " j=" + std::to_string(j));
    }
    if (n > stirling_exact_max_n) {
        fail(status::overflow,
             "s(" + std::to_string(n) + ", " + std::to_string(j) +
                 ") exceeds the exact 64-bit range (n <= " +
                 std::to_string(stirling_exact_max_n) + ")");
    }
    return table().get(n, j);
}

double stirling_log_series(int m, double u, int N) {
    if (m < 0 || N < m) {
        fail(status::invalid_argument,
             "stirling_log_series needs 0 <= m <= N, got m=" +
                 std::to_string(m) + " N=" + std::to_string(N));
    }
    if (!(std::fabs(u) < 1.0)) {
        fail(status::domain, "series argument needs |u| < 1, got u=" +
                                 std::to_string(u));
    }

    // t(j, k) = s(j, k) u^j / j! obeys
    //   t(j+1, k) = u/(j+1) * ( j*t(j, k) + t(j, k-1) ),
    // keeping every intermediate bounded. Only columns k <= m are needed.
    std::vector<double> row(static_cast<std::size_t>(m) + 1, 0.0);
    std::vector<double> next(row.size(), 0.0);
    row[0] = 1.0;  // t(0, 0) = s(0,0) u^0/0!

    double sum = (m == 0) ? 1.0 : 0.0;  // j = 0 contributes only for m = 0
    for (int j = 0; j < N; ++j) {
        const double scale = u / static_cast<double>(j + 1);
        for (int k = 0; k <= m; ++k) {
            const double carry = (k >= 1) ? row[static_cast<std::size_t>(k - 1)] : 0.0;
            next[static_cast<std::size_t>(k)] =
                scale * (static_cast<double>(j) * row[static_cast<std::size_t>(k)] + carry);
        }
        row.swap(next);
        const int jj = j + 1;  // row now holds t(jj, *)
        if (jj >= m) {
            const double sign = ((jj - m) % 2 == 0) ? 1.0 : -1.0;
            sum += sign * row[static_cast<std::size_t>(m)];
        }
    }
    return sum;
}

}  // namespace bgode
