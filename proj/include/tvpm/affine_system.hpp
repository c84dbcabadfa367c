#ifndef TVPM_AFFINE_SYSTEM_HPP
#define TVPM_AFFINE_SYSTEM_HPP

#include <tvpm/config.hpp>
#include <tvpm/linalg.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tvpm {

/*
 * z and the affine coefficients alpha with, for every part A_j,
 *   sum_{i in A_j} alpha_i = 1   and   sum_{i in A_j} alpha_i a_i = z.
 *
 * gamma is the common per-part coefficient sum before normalization when the
 * certificate comes out of the lifted (transversal) construction; it is 1 for
 * certificates solved directly from the affine system.
 */
struct AffineCertificate {
    RVec z;
    std::vector<Rat> alpha;  // alpha[i] for point i
    IndexSet negatives;      // {i : alpha_i < 0}
    IndexSet zero_set;       // {i : alpha_i = 0}; empty in general position
    Rat gamma = 1;

    friend bool operator==(const AffineCertificate&, const AffineCertificate&) = default;
};

struct SignPattern {
    std::size_t negative_count = 0;
    IndexSet negative_set;
    IndexSet zero_set;
};

inline SignPattern sign_pattern(const std::vector<Rat>& alpha) {
    SignPattern sp;
    for (Index i = 0; i < alpha.size(); ++i) {
        if (alpha[i].sign() < 0) sp.negative_set.push_back(i);
        else if (alpha[i].is_zero()) sp.zero_set.push_back(i);
    }
    sp.negative_count = sp.negative_set.size();
    return sp;
}

inline SignPattern sign_pattern(const AffineCertificate& cert) { return sign_pattern(cert.alpha); }

/// Fills negatives/zero_set from alpha.
inline void refresh_signs(AffineCertificate& cert) {
    auto sp = sign_pattern(cert.alpha);
    cert.negatives = std::move(sp.negative_set);
    cert.zero_set = std::move(sp.zero_set);
}

struct AffineSystem {
    RMat m;  // r(d+1) x (n+d); square iff n is the full size
    RVec b;
};

/*
 * Block matrix of the affine-hull intersection system. Unknowns are
 * (alpha_0..alpha_{n-1}, z_1..z_d). Part j occupies rows j(d+1)..j(d+1)+d:
 * d coordinate rows holding the points of A_j in their own columns and -I_d
 * in the last d columns, followed by a row of ones under A_j. The right-hand
 * side is one on every ones-row and zero elsewhere.
 */
inline AffineSystem build_system(const PointConfig& cfg, const Partition& partition) {
    check_partition_for(cfg, partition);
    const std::size_t d = cfg.d();
    const std::size_t n = cfg.n();
    const std::size_t r = cfg.r();
    AffineSystem sys{RMat(r * (d + 1), n + d), RVec(r * (d + 1))};
    for (std::size_t j = 0; j < r; ++j) {
        const std::size_t base = j * (d + 1);
        for (Index i : partition.part(j)) {
            for (std::size_t c = 0; c < d; ++c) sys.m(base + c, i) = cfg.point(i)[c];
            sys.m(base + d, i) = 1;
        }
        for (std::size_t c = 0; c < d; ++c) sys.m(base + c, n + c) = -1;
        sys.b[base + d] = 1;
    }
    return sys;
}

enum class HullIntersection { Point, Empty, Degenerate };

inline const char* to_string(HullIntersection h) {
    switch (h) {
        case HullIntersection::Point: return "point";
        case HullIntersection::Empty: return "empty";
        case HullIntersection::Degenerate: return "degenerate";
    }
    return "?";
}

struct IntersectionResult {
    HullIntersection kind = HullIntersection::Empty;
    std::optional<AffineCertificate> cert;  // set iff kind == Point
    std::optional<Rat> det;                 // det M for square systems
    std::size_t rank = 0;
    std::size_t rank_aug = 0;
};

inline AffineCertificate certificate_from_solution(const PointConfig& cfg, const RVec& x) {
    AffineCertificate cert;
    const std::size_t n = cfg.n();
    cert.alpha.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n));
    cert.z = RVec(std::vector<Rat>(x.begin() + static_cast<std::ptrdiff_t>(n), x.end()));
    cert.gamma = 1;
    refresh_signs(cert);
    return cert;
}

/*
 * Intersection of the affine hulls of the parts.
 *
 * Point: unique intersection point (det M != 0 for square systems).
 * Empty: rank M < rank [M | b].
 * Degenerate: consistent but not unique; only for inputs not in general position.
 * Properness is not required; partitions with oversized parts classify as well.
 */
inline IntersectionResult intersect_affine_hulls(const PointConfig& cfg, const Partition& partition) {
    const auto sys = build_system(cfg, partition);
    IntersectionResult out;
    if (sys.m.rows() == sys.m.cols()) {
        if (auto sol = solve_linear(sys.m, sys.b)) {
            out.kind = HullIntersection::Point;
            out.cert = certificate_from_solution(cfg, sol->x);
            out.det = sol->det;
            out.rank = out.rank_aug = sys.m.rows();
            return out;
        }
        out.det = Rat(0);
    }
    const auto sol = solve_system(sys.m, sys.b);
    out.rank = sol.rank;
    out.rank_aug = sol.rank_aug;
    switch (sol.kind) {
        case SystemKind::Inconsistent: out.kind = HullIntersection::Empty; break;
        case SystemKind::Underdetermined: out.kind = HullIntersection::Degenerate; break;
        case SystemKind::Unique:
            out.kind = HullIntersection::Point;
            out.cert = certificate_from_solution(cfg, sol.x);
            break;
    }
    return out;
}

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> violations;

    void fail(std::string msg) {
        ok = false;
        violations.push_back(std::move(msg));
    }
};

/// Re-substitutes a certificate into the per-part equations; every failing equation is named.
inline VerifyReport verify_certificate(const PointConfig& cfg, const Partition& partition,
                                       const AffineCertificate& cert) {
    VerifyReport rep;
    if (partition.n() != cfg.n() || partition.r() != cfg.r()) {
        rep.fail("partition shape does not match config (n=" + std::to_string(cfg.n()) +
                 ", r=" + std::to_string(cfg.r()) + ")");
        return rep;
    }
    if (cert.alpha.size() != cfg.n()) {
        rep.fail("alpha has " + std::to_string(cert.alpha.size()) + " entries, expected " +
                 std::to_string(cfg.n()));
        return rep;
    }
    if (cert.z.dim() != cfg.d()) {
        rep.fail("z has dimension " + std::to_string(cert.z.dim()) + ", expected " + std::to_string(cfg.d()));
        return rep;
    }
    for (std::size_t j = 0; j < partition.r(); ++j) {
        Rat sum;
        RVec comb(cfg.d());
        for (Index i : partition.part(j)) {
            sum += cert.alpha[i];
            comb += cfg.point(i) * cert.alpha[i];
        }
        if (sum != Rat(1))
            rep.fail("part " + std::to_string(j) + ": sum of alpha = " + sum.str() + ", expected 1");
        if (comb != cert.z)
            rep.fail("part " + std::to_string(j) + ": sum alpha_i a_i = " + to_string(comb) + ", expected z = " +
                     to_string(cert.z));
    }
    const auto sp = sign_pattern(cert.alpha);
    if (sp.negative_set != cert.negatives) rep.fail("negatives list does not match the signs of alpha");
    if (sp.zero_set != cert.zero_set) rep.fail("zero_set list does not match the zeros of alpha");
    return rep;
}

}  // namespace tvpm

#endif  // TVPM_AFFINE_SYSTEM_HPP
