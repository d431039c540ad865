#pragma once

// Exact rational linear feasibility, used as a test oracle for magic-window
// membership: is chi + rho inside the weight zonotope Sigma/2 + t*chi_0?
// Solved by a phase-1 simplex with Bland's rule over exact rationals.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <vector>

namespace feasibility {

using Rat = boost::multiprecision::cpp_rational;

// Does {x : lower <= x <= upper, A x = target} have a point?
inline bool box_feasible(const std::vector<std::vector<Rat>>& A,
                         const std::vector<Rat>& target,
                         const std::vector<Rat>& lower,
                         const std::vector<Rat>& upper) {
    const size_t m = A.size();
    const size_t n = lower.size();
    for (size_t i = 0; i < n; ++i)
        if (lower[i] > upper[i]) return false;

    // Shift to y = x - lower >= 0 and add slacks for the upper bounds:
    //   A y = target - A lower,   y_i + s_i = upper_i - lower_i.
    const size_t rows = m + n;
    const size_t structural = 2 * n;
    const size_t cols = structural + rows;  // + artificials
    std::vector<std::vector<Rat>> T(rows, std::vector<Rat>(cols + 1, 0));
    for (size_t r = 0; r < m; ++r) {
        Rat rhs = target[r];
        for (size_t j = 0; j < n; ++j) {
            T[r][j] = A[r][j];
            rhs -= A[r][j] * lower[j];
        }
        T[r][cols] = rhs;
    }
    for (size_t i = 0; i < n; ++i) {
        T[m + i][i] = 1;
        T[m + i][n + i] = 1;
        T[m + i][cols] = upper[i] - lower[i];
    }
    for (size_t r = 0; r < rows; ++r) {
        if (T[r][cols] < 0)
            for (size_t j = 0; j <= cols; ++j) T[r][j] = -T[r][j];
        T[r][structural + r] = 1;
    }

    // Phase-1 objective row: w = sum of artificials, expressed in nonbasics.
    std::vector<Rat> W(cols + 1, 0);
    for (size_t r = 0; r < rows; ++r)
        for (size_t j = 0; j <= cols; ++j)
            if (j < structural || j == cols) W[j] += T[r][j];

    std::vector<size_t> basis(rows);
    for (size_t r = 0; r < rows; ++r) basis[r] = structural + r;

    for (;;) {
        size_t enter = cols;
        for (size_t j = 0; j < structural; ++j) {
            if (W[j] > 0) {  // Bland: first improving column
                enter = j;
                break;
            }
        }
        if (enter == cols) break;
        size_t leave = rows;
        Rat best;
        for (size_t r = 0; r < rows; ++r) {
            if (T[r][enter] <= 0) continue;
            const Rat ratio = T[r][cols] / T[r][enter];
            if (leave == rows || ratio < best ||
                (ratio == best && basis[r] < basis[leave])) {
                best = ratio;
                leave = r;
            }
        }
        if (leave == rows) throw std::logic_error("phase-1 LP unbounded");
        const Rat piv = T[leave][enter];
        for (size_t j = 0; j <= cols; ++j) T[leave][j] /= piv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == leave || T[r][enter] == 0) continue;
            const Rat f = T[r][enter];
            for (size_t j = 0; j <= cols; ++j) T[r][j] -= f * T[leave][j];
        }
        if (W[enter] != 0) {
            const Rat f = W[enter];
            for (size_t j = 0; j <= cols; ++j) W[j] -= f * T[leave][j];
        }
        basis[leave] = enter;
    }
    return W[cols] == 0;
}

// chi + rho in Sigma(d)/2 + t*chi_0 for the one-loop quiver: the zonotope is
// spanned by the roots e_i - e_j (i > j) with coefficients in [-1/2, 1/2].
inline bool in_magic_window_oneloop(const std::vector<int>& chi, Rat t) {
    const int d = static_cast<int>(chi.size());
    std::vector<std::pair<int, int>> vars;  // (i, j), i > j
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < i; ++j) vars.emplace_back(i, j);
    const size_t n = vars.size();
    std::vector<std::vector<Rat>> A(static_cast<size_t>(d), std::vector<Rat>(n, 0));
    for (size_t v = 0; v < n; ++v) {
        A[static_cast<size_t>(vars[v].first)][v] = 1;
        A[static_cast<size_t>(vars[v].second)][v] = -1;
    }
    std::vector<Rat> target(static_cast<size_t>(d));
    for (int mth = 0; mth < d; ++mth)
        target[static_cast<size_t>(mth)] =
            Rat(chi[static_cast<size_t>(mth)]) + Rat(2 * mth - (d - 1), 2) - t;
    std::vector<Rat> lower(n, Rat(-1, 2)), upper(n, Rat(1, 2));
    return box_feasible(A, target, lower, upper);
}

// chi + rho in Sigma_a(d)/2 + t*chi_0 for the framed quiver: additionally the
// basis directions e_i with coefficients in [-a/2, a/2].
inline bool in_magic_window_framed(const std::vector<int>& chi, int a, Rat t) {
    const int d = static_cast<int>(chi.size());
    std::vector<std::pair<int, int>> vars;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < i; ++j) vars.emplace_back(i, j);
    const size_t nroots = vars.size();
    const size_t n = nroots + static_cast<size_t>(d);
    std::vector<std::vector<Rat>> A(static_cast<size_t>(d), std::vector<Rat>(n, 0));
    for (size_t v = 0; v < nroots; ++v) {
        A[static_cast<size_t>(vars[v].first)][v] = 1;
        A[static_cast<size_t>(vars[v].second)][v] = -1;
    }
    for (int i = 0; i < d; ++i) A[static_cast<size_t>(i)][nroots + static_cast<size_t>(i)] = 1;
    std::vector<Rat> target(static_cast<size_t>(d));
    for (int mth = 0; mth < d; ++mth)
        target[static_cast<size_t>(mth)] =
            Rat(chi[static_cast<size_t>(mth)]) + Rat(2 * mth - (d - 1), 2) - t;
    std::vector<Rat> lower(n, Rat(-1, 2)), upper(n, Rat(1, 2));
    for (size_t i = nroots; i < n; ++i) {
        lower[i] = Rat(-a, 2);
        upper[i] = Rat(a, 2);
    }
    return box_feasible(A, target, lower, upper);
}

}  // namespace feasibility
