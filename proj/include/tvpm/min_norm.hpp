#ifndef TVPM_MIN_NORM_HPP
#define TVPM_MIN_NORM_HPP

#include <tvpm/config.hpp>
#include <tvpm/linalg.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace tvpm {

struct MinNormResult {
    RVec w;                    // the minimum-norm point of the convex hull
    std::vector<Rat> weights;  // convex coefficients, one per input point
    IndexSet support;          // affinely independent points carrying positive weight
};

/*
 * Minimizer of |sum mu_i p_i|^2 over the affine hull of `pts` (sum mu_i = 1).
 * Solves the KKT system [G 1; 1^T 0] [mu; nu] = [0; 1] with G the Gram
 * matrix; std::nullopt when the points are affinely dependent.
 */
inline std::optional<std::vector<Rat>> affine_min_norm_coefficients(const std::vector<const RVec*>& pts) {
    const std::size_t k = pts.size();
    RMat kkt(k + 1, k + 1);
    RVec rhs(k + 1);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            kkt(i, j) = dot(*pts[i], *pts[j]);
            kkt(j, i) = kkt(i, j);
        }
        kkt(i, k) = 1;
        kkt(k, i) = 1;
    }
    rhs[k] = 1;
    auto sol = solve_linear(kkt, rhs);
    if (!sol) return std::nullopt;
    return std::vector<Rat>(sol->x.begin(), sol->x.begin() + static_cast<std::ptrdiff_t>(k));
}

/*
 * Wolfe's minimum-norm-point algorithm in exact arithmetic.
 *
 * The corral S stays affinely independent: a point enters only when
 * <x, p> < |x|^2, which places it off aff(S). Minor cycles move x toward the
 * affine minimizer of aff(S) until every coefficient is positive, dropping the
 * points whose weight reaches zero. Termination is exact: no tolerances.
 */
inline MinNormResult min_norm_point(std::span<const RVec> points) {
    if (points.empty()) throw std::invalid_argument("min_norm_point: empty point set");
    const std::size_t dim = points[0].dim();
    for (const auto& p : points)
        if (p.dim() != dim) throw std::invalid_argument("min_norm_point: mixed dimensions");

    std::size_t start = 0;
    Rat best = norm2(points[0]);
    for (std::size_t i = 1; i < points.size(); ++i) {
        Rat v = norm2(points[i]);
        if (v < best) {
            best = std::move(v);
            start = i;
        }
    }

    std::vector<std::size_t> corral{start};
    std::vector<Rat> lambda{Rat(1)};
    RVec x = points[start];

    auto combine = [&]() {
        RVec out(dim);
        for (std::size_t t = 0; t < corral.size(); ++t)
            if (!lambda[t].is_zero()) out += points[corral[t]] * lambda[t];
        return out;
    };

    while (true) {
        const Rat xx = norm2(x);
        if (xx.is_zero()) break;
        std::size_t enter = points.size();
        Rat lowest;
        for (std::size_t i = 0; i < points.size(); ++i) {
            Rat v = dot(x, points[i]);
            if (enter == points.size() || v < lowest) {
                lowest = std::move(v);
                enter = i;
            }
        }
        if (lowest >= xx) break;
        corral.push_back(enter);
        lambda.emplace_back(0);

        while (true) {
            std::vector<const RVec*> pts;
            for (auto c : corral) pts.push_back(&points[c]);
            auto mu = affine_min_norm_coefficients(pts);
            if (!mu) throw std::logic_error("min_norm_point: corral lost affine independence");

            bool interior = true;
            for (const auto& m : *mu)
                if (m.sign() <= 0) interior = false;
            if (interior) {
                lambda = std::move(*mu);
                x = combine();
                break;
            }

            std::optional<Rat> theta;
            for (std::size_t t = 0; t < corral.size(); ++t) {
                if ((*mu)[t].sign() > 0 || lambda[t] == (*mu)[t]) continue;
                Rat th = lambda[t] / (lambda[t] - (*mu)[t]);
                if (!theta || th < *theta) theta = std::move(th);
            }
            const Rat step = theta.value_or(Rat(1));
            for (std::size_t t = 0; t < corral.size(); ++t)
                lambda[t] = (Rat(1) - step) * lambda[t] + step * (*mu)[t];

            std::vector<std::size_t> kept;
            std::vector<Rat> kept_lambda;
            for (std::size_t t = 0; t < corral.size(); ++t) {
                if (lambda[t].sign() > 0) {
                    kept.push_back(corral[t]);
                    kept_lambda.push_back(lambda[t]);
                }
            }
            corral = std::move(kept);
            lambda = std::move(kept_lambda);
            x = combine();
        }
    }

    MinNormResult out;
    out.w = x;
    out.weights.assign(points.size(), Rat());
    for (std::size_t t = 0; t < corral.size(); ++t) out.weights[corral[t]] += lambda[t];
    for (std::size_t i = 0; i < points.size(); ++i)
        if (out.weights[i].sign() > 0) out.support.push_back(i);
    return out;
}

inline MinNormResult min_norm_point(const std::vector<RVec>& points) {
    return min_norm_point(std::span<const RVec>(points));
}

}  // namespace tvpm

#endif  // TVPM_MIN_NORM_HPP
