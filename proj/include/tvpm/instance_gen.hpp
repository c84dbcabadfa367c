#ifndef TVPM_INSTANCE_GEN_HPP
#define TVPM_INSTANCE_GEN_HPP

#include <tvpm/colored.hpp>
#include <tvpm/config.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tvpm {

inline constexpr long kCoordRange = 1'000'000;  // numerators drawn from [-10^6, 10^6]
inline constexpr long kCoordDenominator = 1'000;
inline constexpr int kMaxResample = 1000;

/*
 * Seeded integer source with a platform-independent mapping onto ranges
 * (std::uniform_int_distribution is implementation-defined).
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long uniform(long lo, long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return lo + static_cast<long>(x % span);
    }

    Rat coordinate() { return Rat(mpz_class(uniform(-kCoordRange, kCoordRange)), mpz_class(kCoordDenominator)); }

    /// Uniform grid value in [-1, 1] with denominator 10^6.
    Rat unit() { return Rat(mpz_class(uniform(-kCoordRange, kCoordRange)), mpz_class(kCoordRange)); }

private:
    std::mt19937_64 eng_;
};

/// n random points with no d+1 of them affinely dependent.
inline std::vector<RVec> random_points(std::size_t d, std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    for (int attempt = 0; attempt < kMaxResample; ++attempt) {
        std::vector<RVec> pts(n, RVec(d));
        for (auto& p : pts)
            for (auto& x : p) x = rng.coordinate();
        if (!has_affinely_dependent_subset(pts, d)) return pts;
    }
    throw std::runtime_error("random_points: no general-position sample within the resampling cap");
}

/// Full-size configuration n = (r-1)(d+1)+1 in general position.
inline PointConfig random_config(std::size_t d, std::size_t r, std::uint64_t seed) {
    if (d < 1 || r < 2) throw std::invalid_argument("random_config: need d >= 1 and r >= 2");
    return PointConfig(d, r, random_points(d, full_size(d, r), seed));
}

/// Same generator with an arbitrary point count (deficient configurations).
inline PointConfig random_config_n(std::size_t d, std::size_t r, std::size_t n, std::uint64_t seed) {
    return PointConfig(d, r, random_points(d, n, seed));
}

struct Instance {
    PointConfig config;
    IndexSet m_set;
};

namespace detail {

// Vertex h of the standard simplex: 0 for h = 0, e_h otherwise.
inline RVec simplex_vertex(std::size_t d, std::size_t h) {
    RVec v(d);
    if (h > 0) v[h - 1] = 1;
    return v;
}

inline RVec box_sample(Rng& rng, const RVec& center, const Rat& eps) {
    RVec p = center;
    for (auto& x : p) x += eps * rng.unit();
    return p;
}

// Cluster sizes per vertex; optional center point first.
inline std::vector<RVec> clustered_sample(Rng& rng, std::size_t d, const std::vector<std::size_t>& sizes,
                                          const Rat& eps, bool with_center) {
    std::vector<RVec> pts;
    if (with_center) {
        RVec c(d);
        for (auto& x : c) x = Rat(mpz_class(1), mpz_class(static_cast<unsigned long>(d + 1)));
        pts.push_back(std::move(c));
    }
    for (std::size_t h = 0; h < sizes.size(); ++h) {
        const RVec v = simplex_vertex(d, h);
        for (std::size_t t = 0; t < sizes[h]; ++t) pts.push_back(box_sample(rng, v, eps));
    }
    return pts;
}

inline void check_example_args(std::size_t d, std::size_t r, const Rat& eps) {
    if (d < 1 || r < 2) throw std::invalid_argument("example: need d >= 1 and r >= 2");
    if (eps.sign() <= 0) throw std::invalid_argument("example: eps must be positive");
}

}  // namespace detail

/*
 * Centroid c of the standard simplex (index 0) plus r-1 points in the
 * l-infinity eps-box around each of the d+1 vertices; M = {c}.
 */
inline Instance example1(std::size_t d, std::size_t r, const Rat& eps, std::uint64_t seed) {
    detail::check_example_args(d, r, eps);
    Rng rng(seed);
    const std::vector<std::size_t> sizes(d + 1, r - 1);
    for (int attempt = 0; attempt < kMaxResample; ++attempt) {
        auto pts = detail::clustered_sample(rng, d, sizes, eps, true);
        if (!has_affinely_dependent_subset(pts, d)) return Instance{PointConfig(d, r, std::move(pts)), IndexSet{0}};
    }
    throw std::runtime_error("example1: no general-position sample within the resampling cap");
}

/// r points near the first vertex (these form M), r-1 near each other vertex.
inline Instance example2(std::size_t d, std::size_t r, const Rat& eps, std::uint64_t seed) {
    detail::check_example_args(d, r, eps);
    Rng rng(seed);
    std::vector<std::size_t> sizes(d + 1, r - 1);
    sizes[0] = r;
    IndexSet m(r);
    std::iota(m.begin(), m.end(), 0);
    for (int attempt = 0; attempt < kMaxResample; ++attempt) {
        auto pts = detail::clustered_sample(rng, d, sizes, eps, false);
        if (!has_affinely_dependent_subset(pts, d)) return Instance{PointConfig(d, r, std::move(pts)), m};
    }
    throw std::runtime_error("example2: no general-position sample within the resampling cap");
}

/// Top-k points under a seeded random linear functional with no ties; separated by construction.
inline IndexSet separated_subset(const PointConfig& cfg, std::size_t k, std::uint64_t seed) {
    if (k > cfg.n()) throw std::invalid_argument("separated_subset: k exceeds n");
    Rng rng(seed);
    for (int attempt = 0; attempt < kMaxResample; ++attempt) {
        RVec f(cfg.d());
        for (auto& x : f) x = Rat(rng.uniform(-kCoordRange, kCoordRange));
        std::vector<std::pair<Rat, Index>> vals;
        for (Index i = 0; i < cfg.n(); ++i) vals.emplace_back(dot(f, cfg.point(i)), i);
        std::sort(vals.begin(), vals.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
        bool tie = false;
        for (std::size_t i = 1; i < vals.size(); ++i) tie = tie || vals[i].first == vals[i - 1].first;
        if (tie) continue;
        IndexSet out;
        for (std::size_t i = 0; i < k; ++i) out.push_back(vals[i].second);
        std::sort(out.begin(), out.end());
        return out;
    }
    throw std::runtime_error("separated_subset: every sampled functional had ties");
}

/// Random index subset (each index kept with probability 1/2).
inline IndexSet random_subset(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    IndexSet out;
    for (Index i = 0; i < n; ++i)
        if (rng.uniform(0, 1) == 1) out.push_back(i);
    return out;
}

/// n = (r-1)d+1 classes of r random points, union in general position.
inline ColorClasses random_color_classes(std::size_t d, std::size_t r, std::uint64_t seed) {
    const std::size_t n = ColorClasses::expected_classes(d, r);
    auto pts = random_points(d, n * r, seed);
    std::vector<std::vector<RVec>> classes(n);
    for (std::size_t i = 0; i < n * r; ++i) classes[i / r].push_back(std::move(pts[i]));
    return ColorClasses(d, r, std::move(classes));
}

}  // namespace tvpm

#endif  // TVPM_INSTANCE_GEN_HPP
