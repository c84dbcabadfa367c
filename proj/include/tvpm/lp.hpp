#ifndef TVPM_LP_HPP
#define TVPM_LP_HPP

#include <tvpm/linalg.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace tvpm {

/*
 * Outcome of the feasibility problem  A x = b, x >= 0.
 *
 * Feasible: x is a basic feasible solution.
 * Infeasible: y is a Farkas certificate, y^T A >= 0 componentwise and y^T b < 0.
 */
struct FeasibilityResult {
    bool feasible = false;
    RVec x;
    RVec farkas;
};

/*
 * Phase-1 simplex over the rationals with Bland's rule (smallest entering
 * index, smallest leaving basic variable on ratio ties), which rules out
 * cycling. Artificial variables start basic; the dual vector at the phase-1
 * optimum is read off the reduced costs of the artificial columns.
 */
inline FeasibilityResult find_nonnegative_solution(const RMat& a, const RVec& b) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (b.dim() != m) throw std::invalid_argument("find_nonnegative_solution: rhs dimension mismatch");

    const std::size_t width = n + m + 1;  // original | artificial | rhs
    const std::size_t rhs = n + m;
    std::vector<std::vector<Rat>> t(m, std::vector<Rat>(width));
    std::vector<int> flip(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
        if (b[i].sign() < 0) flip[i] = -1;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = flip[i] < 0 ? -a(i, j) : a(i, j);
        t[i][n + i] = 1;
        t[i][rhs] = flip[i] < 0 ? -b[i] : b[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    // Reduced costs for minimizing the sum of artificials; cost[rhs] holds -objective.
    std::vector<Rat> cost(width);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) cost[j] -= t[i][j];
        cost[rhs] -= t[i][rhs];
    }

    while (true) {
        std::size_t enter = width;
        for (std::size_t j = 0; j < rhs; ++j) {
            if (cost[j].sign() < 0) {
                enter = j;
                break;
            }
        }
        if (enter == width) break;

        std::size_t leave = m;
        Rat best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter].sign() <= 0) continue;
            Rat ratio = t[i][rhs] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = std::move(ratio);
            }
        }
        // Phase 1 is bounded below by zero, so an improving column always has a positive entry.
        if (leave == m) throw std::logic_error("phase-1 simplex: unbounded direction");

        const Rat piv = t[leave][enter];
        for (auto& v : t[leave]) v /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter].is_zero()) continue;
            const Rat f = t[i][enter];
            for (std::size_t j = 0; j < width; ++j)
                if (!t[leave][j].is_zero()) t[i][j] -= f * t[leave][j];
        }
        if (!cost[enter].is_zero()) {
            const Rat f = cost[enter];
            for (std::size_t j = 0; j < width; ++j)
                if (!t[leave][j].is_zero()) cost[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    FeasibilityResult out;
    const Rat objective = -cost[rhs];
    if (objective.is_zero()) {
        out.feasible = true;
        out.x = RVec(n);
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < n) out.x[basis[i]] = t[i][rhs];
        return out;
    }

    // Reduced cost of artificial k is 1 - y_k for the sign-normalized rows.
    out.farkas = RVec(m);
    for (std::size_t k = 0; k < m; ++k) {
        const Rat y = Rat(1) - cost[n + k];
        out.farkas[k] = flip[k] < 0 ? y : -y;
    }
    return out;
}

}  // namespace tvpm

#endif  // TVPM_LP_HPP
