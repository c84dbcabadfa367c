// Test-only reference implementations. None of these call the code paths
// they are used to check.
#ifndef TVPM_TESTS_ORACLES_HPP
#define TVPM_TESTS_ORACLES_HPP

#include <tvpm/tvpm.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace tvpm::oracle {

/// Laplace expansion along the first row.
inline Rat cofactor_det(const RMat& m) {
    const std::size_t n = m.rows();
    if (n == 0) return Rat(1);
    if (n == 1) return m(0, 0);
    Rat det;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c).is_zero()) continue;
        RMat minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j)
                if (j != c) minor(i - 1, jj++) = m(i, j);
        Rat term = m(0, c) * cofactor_det(minor);
        det += (c % 2 == 0) ? term : -term;
    }
    return det;
}

inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> sel(n, false);
    std::fill(sel.begin(), sel.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
        std::vector<std::size_t> c;
        for (std::size_t i = 0; i < n; ++i)
            if (sel[i]) c.push_back(i);
        out.push_back(c);
    } while (std::prev_permutation(sel.begin(), sel.end()));
    return out;
}

/// Largest k with a nonzero k x k minor.
inline std::size_t rank_by_minors(const RMat& m) {
    for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
        for (const auto& rs : combinations(m.rows(), k)) {
            for (const auto& cs : combinations(m.cols(), k)) {
                RMat sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
                if (!cofactor_det(sub).is_zero()) return k;
            }
        }
    }
    return 0;
}

/*
 * All set partitions of {0..n-1} via labelings in [0, r)^n taken to a
 * canonical set-of-sets form, then filtered by part count and size.
 */
inline std::set<std::set<std::set<std::size_t>>> naive_partitions(std::size_t n, std::size_t r, std::size_t d) {
    std::set<std::set<std::set<std::size_t>>> out;
    std::vector<std::size_t> lab(n, 0);
    while (true) {
        std::map<std::size_t, std::set<std::size_t>> groups;
        for (std::size_t i = 0; i < n; ++i) groups[lab[i]].insert(i);
        if (groups.size() == r) {
            bool ok = true;
            std::set<std::set<std::size_t>> p;
            for (auto& [_, g] : groups) {
                ok = ok && g.size() <= d + 1;
                p.insert(g);
            }
            if (ok) out.insert(p);
        }
        std::size_t pos = 0;
        while (pos < n && ++lab[pos] == r) lab[pos++] = 0;
        if (pos == n) break;
    }
    return out;
}

/*
 * Minimum-norm point by exhaustion: project the origin onto the affine hull
 * of every affinely independent subset (normal equations solved by Cramer's
 * rule via cofactor determinants) and keep the smallest feasible projection.
 */
inline RVec brute_force_min_norm(const std::vector<RVec>& pts) {
    const std::size_t m = pts.size();
    std::optional<RVec> best;
    std::optional<Rat> best_norm;
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) s.push_back(i);
        const std::size_t k = s.size();
        // [G 1; 1^T 0] [mu; nu] = [0; 1]
        RMat a(k + 1, k + 1);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) a(i, j) = dot(pts[s[i]], pts[s[j]]);
            a(i, k) = 1;
            a(k, i) = 1;
        }
        const Rat det = cofactor_det(a);
        if (det.is_zero()) continue;  // affinely dependent subset
        RVec x(pts[0].dim());
        bool feasible = true;
        for (std::size_t c = 0; c < k && feasible; ++c) {
            RMat ac = a;
            for (std::size_t i = 0; i <= k; ++i) ac(i, c) = (i == k) ? Rat(1) : Rat(0);
            const Rat mu = cofactor_det(ac) / det;
            if (mu.sign() < 0) feasible = false;
            x += pts[s[c]] * mu;
        }
        if (!feasible) continue;
        Rat nn = norm2(x);
        if (!best_norm || nn < *best_norm) {
            best_norm = nn;
            best = x;
        }
    }
    return *best;
}

/// Solution of the colorful equal-coefficient system for one assignment.
struct ColorfulSolution {
    std::vector<std::vector<std::size_t>> assignment;  // normalized: class 0 is the identity
    std::vector<Rat> coefficients;
    RVec z;
};

/// Relabel parts so that class 0 puts its point j into part j.
inline std::vector<std::vector<std::size_t>> normalize_assignment(const std::vector<std::vector<std::size_t>>& a) {
    const std::size_t r = a[0].size();
    std::vector<std::size_t> relabel(r);  // old part -> new part
    for (std::size_t j = 0; j < r; ++j) relabel[j] = a[0][j];
    std::vector<std::vector<std::size_t>> out(a.size(), std::vector<std::size_t>(r));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < r; ++j) out[i][relabel[j]] = a[i][j];
    return out;
}

/// Every colorful partition (class 0 fixed) whose square system has a unique solution.
inline std::vector<ColorfulSolution> enumerate_colorful(const ColorClasses& cc) {
    const std::size_t n = cc.n();
    const std::size_t r = cc.r();
    const std::size_t d = cc.d();
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(r);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    std::vector<ColorfulSolution> out;
    std::vector<std::size_t> pick(n, 0);
    while (true) {
        std::vector<std::vector<std::size_t>> assignment(n);
        assignment[0] = perms[0];
        for (std::size_t i = 1; i < n; ++i) assignment[i] = perms[pick[i]];
        // unknowns alpha_0..alpha_{n-1}, z_0..z_{d-1}; rows: r*d coordinate rows + 1 sum row
        RMat a(r * d + 1, n + d);
        RVec b(r * d + 1);
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t c = 0; c < d; ++c) {
                for (std::size_t i = 0; i < n; ++i) a(j * d + c, i) = cc.cls(i)[assignment[i][j]][c];
                a(j * d + c, n + c) = -1;
            }
        for (std::size_t i = 0; i < n; ++i) a(r * d, i) = 1;
        b[r * d] = 1;
        const Rat det = cofactor_det(a);
        if (!det.is_zero()) {
            ColorfulSolution s;
            s.assignment = assignment;
            RVec x(n + d);
            for (std::size_t c = 0; c < n + d; ++c) {
                RMat ac = a;
                for (std::size_t i = 0; i < a.rows(); ++i) ac(i, c) = b[i];
                x[c] = cofactor_det(ac) / det;
            }
            s.coefficients.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n));
            s.z = RVec(std::vector<Rat>(x.begin() + static_cast<std::ptrdiff_t>(n), x.end()));
            out.push_back(std::move(s));
        }
        std::size_t pos = 1;
        while (pos < n && ++pick[pos] == perms.size()) pick[pos++] = 0;
        if (pos >= n) break;
    }
    return out;
}

}  // namespace tvpm::oracle

#endif  // TVPM_TESTS_ORACLES_HPP
