#ifndef TVPM_COLORED_HPP
#define TVPM_COLORED_HPP

#include <tvpm/affine_system.hpp>
#include <tvpm/colorful_caratheodory.hpp>
#include <tvpm/config.hpp>
#include <tvpm/sarkaria.hpp>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tvpm {

/// n = (r-1)d + 1 disjoint color classes of exactly r points each in R^d.
class ColorClasses {
public:
    ColorClasses() = default;
    ColorClasses(std::size_t d, std::size_t r, std::vector<std::vector<RVec>> classes)
        : d_(d), r_(r), classes_(std::move(classes)) {
        if (d_ < 1 || r_ < 2) throw std::invalid_argument("ColorClasses: need d >= 1 and r >= 2");
        if (classes_.size() != expected_classes(d_, r_))
            throw std::invalid_argument("ColorClasses: expected " + std::to_string(expected_classes(d_, r_)) +
                                        " classes, got " + std::to_string(classes_.size()));
        std::vector<RVec> all;
        for (const auto& f : classes_) {
            if (f.size() != r_)
                throw std::invalid_argument("ColorClasses: every class needs exactly r = " + std::to_string(r_) +
                                            " points");
            for (const auto& p : f) {
                if (p.dim() != d_) throw std::invalid_argument("ColorClasses: point dimension mismatch");
                all.push_back(p);
            }
        }
        // PointConfig rejects duplicates across the union.
        const PointConfig check(d_, r_, std::move(all));
        (void)check;
    }

    static constexpr std::size_t expected_classes(std::size_t d, std::size_t r) { return (r - 1) * d + 1; }

    std::size_t d() const { return d_; }
    std::size_t r() const { return r_; }
    std::size_t n() const { return classes_.size(); }
    const std::vector<RVec>& cls(std::size_t i) const { return classes_.at(i); }
    const std::vector<std::vector<RVec>>& classes() const { return classes_; }

    friend bool operator==(const ColorClasses&, const ColorClasses&) = default;

private:
    std::size_t d_ = 1;
    std::size_t r_ = 2;
    std::vector<std::vector<RVec>> classes_;
};

/*
 * assignment[i][j] is the index (within class i) of the point x_{i,j} placed
 * in part j; every row is a permutation of 0..r-1. One coefficient per class.
 */
struct ColorfulPartition {
    std::vector<std::vector<std::size_t>> assignment;
    std::vector<Rat> coefficients;
    RVec z;

    friend bool operator==(const ColorfulPartition&, const ColorfulPartition&) = default;
};

struct PermutationLift {
    std::vector<RVec> points;                     // distinct F (x) sigma
    std::vector<std::vector<std::size_t>> perms;  // sigma for each point, first in lexicographic order
};

/// Largest r for which the r! permutation lift is materialized.
inline constexpr std::size_t kMaxColoredParts = 5;

/*
 * S(F) = { sum_k z_k (x) v_{sigma(k)} : sigma a permutation of [r] } in
 * R^{d(r-1)}, with every z_k negated when `flip` is set.
 */
inline PermutationLift permutation_lift(const std::vector<RVec>& f, bool flip, const CompanionSimplex& simplex) {
    const std::size_t r = f.size();
    if (simplex.vectors.size() != r) throw std::invalid_argument("permutation_lift: class size != r");
    if (r > kMaxColoredParts)
        throw std::length_error("permutation_lift: r = " + std::to_string(r) + " exceeds capacity (r <= " +
                                std::to_string(kMaxColoredParts) + ")");
    const std::size_t d = f.front().dim();
    PermutationLift out;
    std::vector<std::size_t> sigma(r);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        RVec p(d * (r - 1));
        for (std::size_t k = 0; k < r; ++k) p += tensor(f[k], simplex.vectors[sigma[k]]);
        if (flip) p = -p;
        if (std::find(out.points.begin(), out.points.end(), p) == out.points.end()) {
            out.points.push_back(std::move(p));
            out.perms.push_back(sigma);
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

/// MPositive: coefficients positive on M and negative off M; MNegative: the reverse.
enum class ColoredAlternative { MPositive, MNegative };

inline const char* to_string(ColoredAlternative a) {
    return a == ColoredAlternative::MPositive ? "m_positive" : "m_negative";
}

struct ColoredResult {
    bool degenerate_gamma = false;
    std::optional<ColorfulPartition> partition;
    std::optional<ColoredAlternative> alternative;  // realized sign split; unset if mixed or zero
    Rat gamma;
    PivotRun run;
};

/// Realized sign split of per-class coefficients relative to M, if it is one of the two alternatives.
inline std::optional<ColoredAlternative> classify_split(const std::vector<Rat>& coef, const IndexSet& m_set) {
    bool pos = true, neg = true;
    for (std::size_t i = 0; i < coef.size(); ++i) {
        const int s = coef[i].sign() * (contains(m_set, i) ? 1 : -1);
        if (s <= 0) pos = false;
        if (s >= 0) neg = false;
    }
    if (pos) return ColoredAlternative::MPositive;
    if (neg) return ColoredAlternative::MNegative;
    return std::nullopt;
}

/*
 * Colored plus-minus partition with equal coefficients across classes.
 *
 * G_i = F_i for i in M and -F_i otherwise; colourful Caratheodory over the
 * permutation lifts S(G_i) gives beta_i >= 0 and permutations sigma_i with
 * sum_i beta_i y_{i, sigma_i^{-1}(j)} identical for every part j. Then
 * alpha_i = +-beta_i (plus on M), gamma = sum alpha_i, coefficients alpha_i / gamma.
 */
inline ColoredResult colored_tverberg_pm(const ColorClasses& cc, IndexSet m_set, const PivotObserver& observer = {}) {
    const std::size_t n = cc.n();
    const std::size_t r = cc.r();
    const std::size_t d = cc.d();
    m_set = normalize_index_set(std::move(m_set), n);
    const auto simplex = companion_simplex(r);

    std::vector<PermutationLift> lifts;
    ColorSets sets;
    for (std::size_t i = 0; i < n; ++i) {
        lifts.push_back(permutation_lift(cc.cls(i), !contains(m_set, i), simplex));
        sets.push_back(lifts.back().points);
    }

    ColoredResult out;
    out.run = colorful_caratheodory(sets, std::vector<std::size_t>(n, 0), observer);
    const auto& t = out.run.transversal;

    std::vector<Rat> alpha(n);
    for (std::size_t i = 0; i < n; ++i) {
        alpha[i] = contains(m_set, i) ? t.weights[i] : -t.weights[i];
        out.gamma += alpha[i];
    }
    if (out.gamma.is_zero()) {
        out.degenerate_gamma = true;
        return out;
    }

    ColorfulPartition cp;
    cp.assignment.assign(n, std::vector<std::size_t>(r));
    for (std::size_t i = 0; i < n; ++i) {
        const auto& sigma = lifts[i].perms[t.choice[i]];
        for (std::size_t k = 0; k < r; ++k) cp.assignment[i][sigma[k]] = k;
        cp.coefficients.push_back(alpha[i] / out.gamma);
    }
    cp.z = RVec(d);
    for (std::size_t i = 0; i < n; ++i) cp.z += cc.cls(i)[cp.assignment[i][0]] * cp.coefficients[i];
    out.alternative = classify_split(cp.coefficients, m_set);
    out.partition = std::move(cp);
    return out;
}

/// Checks the per-part equations z = sum_i alpha_i x_{i,j} and sum_i alpha_i = 1 exactly.
inline VerifyReport verify_colorful(const ColorClasses& cc, const ColorfulPartition& cp) {
    VerifyReport rep;
    const std::size_t n = cc.n();
    const std::size_t r = cc.r();
    if (cp.assignment.size() != n || cp.coefficients.size() != n || cp.z.dim() != cc.d()) {
        rep.fail("colorful partition shape does not match the color classes");
        return rep;
    }
    for (std::size_t i = 0; i < n; ++i) {
        auto row = cp.assignment[i];
        std::sort(row.begin(), row.end());
        bool perm = row.size() == r;
        for (std::size_t k = 0; perm && k < r; ++k) perm = row[k] == k;
        if (!perm) {
            rep.fail("class " + std::to_string(i) + ": assignment is not a permutation of its points");
            return rep;
        }
    }
    Rat sum;
    for (const auto& c : cp.coefficients) sum += c;
    if (sum != Rat(1)) rep.fail("sum of coefficients = " + sum.str() + ", expected 1");
    for (std::size_t j = 0; j < r; ++j) {
        RVec comb(cc.d());
        for (std::size_t i = 0; i < n; ++i) comb += cc.cls(i)[cp.assignment[i][j]] * cp.coefficients[i];
        if (comb != cp.z)
            rep.fail("part " + std::to_string(j) + ": sum alpha_i x_{i,j} = " + to_string(comb) + ", expected z = " +
                     to_string(cp.z));
    }
    return rep;
}

}  // namespace tvpm

#endif  // TVPM_COLORED_HPP
