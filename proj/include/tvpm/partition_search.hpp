#ifndef TVPM_PARTITION_SEARCH_HPP
#define TVPM_PARTITION_SEARCH_HPP

#include <tvpm/affine_system.hpp>
#include <tvpm/config.hpp>
#include <tvpm/lp.hpp>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tvpm {

/*
 * Calls visit(partition) for every unordered partition of {0..n-1} into
 * exactly r nonempty parts of size at most d+1, in a fixed order: index i
 * goes into each existing part that still has room (in part order), then
 * into a new part. visit returns false to stop early. Returns the number of
 * partitions visited.
 */
template <typename Visit>
std::size_t for_each_proper_partition(std::size_t n, std::size_t r, std::size_t d, Visit&& visit) {
    const std::size_t cap = d + 1;
    std::vector<IndexSet> parts;
    parts.reserve(r);
    std::size_t visited = 0;
    bool stop = false;

    std::function<void(std::size_t)> place = [&](std::size_t i) {
        if (stop) return;
        const std::size_t remaining = n - i;
        const std::size_t open = parts.size();
        if (remaining < r - open) return;
        std::size_t room = (r - open) * cap;
        for (const auto& p : parts) room += cap - p.size();
        if (remaining > room) return;
        if (i == n) {
            ++visited;
            if (!visit(Partition(parts))) stop = true;
            return;
        }
        for (std::size_t j = 0; j < open && !stop; ++j) {
            if (parts[j].size() >= cap) continue;
            parts[j].push_back(i);
            place(i + 1);
            parts[j].pop_back();
        }
        if (open < r && !stop) {
            parts.push_back({i});
            place(i + 1);
            parts.pop_back();
        }
    };
    if (r >= 1 && n >= r) place(0);
    return visited;
}

inline std::vector<Partition> proper_partitions(std::size_t n, std::size_t r, std::size_t d) {
    std::vector<Partition> out;
    for_each_proper_partition(n, r, d, [&](const Partition& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

struct SearchResult {
    std::optional<Partition> partition;
    std::optional<AffineCertificate> cert;
    std::size_t partitions_scanned = 0;
    std::size_t degenerate_skipped = 0;

    bool found() const { return partition.has_value(); }
};

/// First proper partition (in enumeration order) whose certificate satisfies pred.
template <typename Pred>
SearchResult search_first(const PointConfig& cfg, Pred&& pred) {
    SearchResult res;
    for_each_proper_partition(cfg.n(), cfg.r(), cfg.d(), [&](const Partition& p) {
        ++res.partitions_scanned;
        auto hit = intersect_affine_hulls(cfg, p);
        if (hit.kind != HullIntersection::Point) {
            ++res.degenerate_skipped;
            return true;
        }
        if (!pred(*hit.cert)) return true;
        if (!verify_certificate(cfg, p, *hit.cert).ok)
            throw std::logic_error("search: certificate failed re-substitution");
        res.partition = p;
        res.cert = std::move(hit.cert);
        return false;
    });
    return res;
}

inline void require_full(const PointConfig& cfg, const char* who) {
    if (!cfg.is_full())
        throw std::invalid_argument(std::string(who) + ": expected n = (r-1)(d+1)+1 = " +
                                    std::to_string(full_size(cfg.d(), cfg.r())) + " points, got " +
                                    std::to_string(cfg.n()));
}

/// A proper partition with exactly k strictly negative coefficients, or an exhaustive NotFound.
inline SearchResult search_exact_k(const PointConfig& cfg, std::size_t k) {
    require_full(cfg, "search_exact_k");
    if (k > cfg.n()) throw std::invalid_argument("search_exact_k: k exceeds n");
    return search_first(cfg, [k](const AffineCertificate& c) { return c.negatives.size() == k; });
}

/// A proper partition whose negative coefficients are exactly m_set.
inline SearchResult search_prescribed(const PointConfig& cfg, IndexSet m_set) {
    require_full(cfg, "search_prescribed");
    m_set = normalize_index_set(std::move(m_set), cfg.n());
    return search_first(cfg, [&m_set](const AffineCertificate& c) { return c.negatives == m_set; });
}

/// Every achievable negative count over all proper partitions.
struct SignCensus {
    std::set<std::size_t> counts;
    std::size_t partitions_scanned = 0;
    std::size_t degenerate_skipped = 0;
};

inline SignCensus sign_census(const PointConfig& cfg) {
    SignCensus out;
    for_each_proper_partition(cfg.n(), cfg.r(), cfg.d(), [&](const Partition& p) {
        ++out.partitions_scanned;
        const auto hit = intersect_affine_hulls(cfg, p);
        if (hit.kind != HullIntersection::Point) ++out.degenerate_skipped;
        else out.counts.insert(hit.cert->negatives.size());
        return true;
    });
    return out;
}

struct RadonSpectrum {
    std::set<std::size_t> achievable;
    std::size_t partitions_scanned = 0;
    std::size_t degenerate_skipped = 0;
    RVec affine_dependence;  // diagnostic: lambda with sum lambda_i a_i = 0, sum lambda_i = 0
};

inline RadonSpectrum radon_spectrum(const PointConfig& cfg) {
    if (cfg.r() != 2 || cfg.n() != cfg.d() + 2)
        throw std::invalid_argument("radon_spectrum: expects r = 2 and n = d + 2");
    const auto census = sign_census(cfg);
    RadonSpectrum out{census.counts, census.partitions_scanned, census.degenerate_skipped, {}};
    RMat hom(cfg.d() + 1, cfg.n());
    for (Index i = 0; i < cfg.n(); ++i) {
        for (std::size_t c = 0; c < cfg.d(); ++c) hom(c, i) = cfg.point(i)[c];
        hom(cfg.d(), i) = 1;
    }
    if (auto ker = nullspace(hom); ker.size() == 1) out.affine_dependence = std::move(ker.front());
    return out;
}

/*
 * Strict separation of conv(M) and conv(A \ M).
 *
 * Separated: <normal, a_i> > offset for i in M and < offset otherwise.
 * NotSeparated: point = sum weights_m[i] a_i = sum weights_rest[i] a_i, both
 * convex combinations (weights indexed by point, zero off their side).
 */
struct SeparationResult {
    bool separated = false;
    RVec normal;
    Rat offset;
    RVec point;
    std::vector<Rat> weights_m;
    std::vector<Rat> weights_rest;
};

inline SeparationResult check_separation(const PointConfig& cfg, IndexSet m_set) {
    const std::size_t n = cfg.n();
    const std::size_t d = cfg.d();
    m_set = normalize_index_set(std::move(m_set), n);
    SeparationResult out;

    auto place_offset = [&](const RVec& w) {
        std::optional<Rat> lo, hi;  // min over M, max over the rest
        for (Index i = 0; i < n; ++i) {
            Rat v = dot(w, cfg.point(i));
            if (contains(m_set, i)) {
                if (!lo || v < *lo) lo = v;
            } else if (!hi || v > *hi) {
                hi = v;
            }
        }
        if (lo && hi) return (*lo + *hi) / Rat(2);
        return lo ? *lo - Rat(1) : *hi + Rat(1);
    };

    if (m_set.empty() || m_set.size() == n) {
        out.separated = true;
        out.normal = RVec(d);
        out.normal[0] = 1;
        out.offset = place_offset(out.normal);
        return out;
    }

    // Columns: lambda_i for i in M as (a_i, 1, 0), mu_i otherwise as (-a_i, 0, 1).
    RMat a(d + 2, n);
    RVec b(d + 2);
    for (Index i = 0; i < n; ++i) {
        const bool in_m = contains(m_set, i);
        for (std::size_t c = 0; c < d; ++c) a(c, i) = in_m ? cfg.point(i)[c] : -cfg.point(i)[c];
        a(in_m ? d : d + 1, i) = 1;
    }
    b[d] = 1;
    b[d + 1] = 1;

    const auto lp = find_nonnegative_solution(a, b);
    if (lp.feasible) {
        out.separated = false;
        out.point = RVec(d);
        out.weights_m.assign(n, Rat());
        out.weights_rest.assign(n, Rat());
        for (Index i = 0; i < n; ++i) {
            if (contains(m_set, i)) {
                out.weights_m[i] = lp.x[i];
                out.point += cfg.point(i) * lp.x[i];
            } else {
                out.weights_rest[i] = lp.x[i];
            }
        }
        return out;
    }
    // y = (w, s, t): <w,a_i> >= -s on M, <w,a_i> <= t off M, and -s > t.
    out.separated = true;
    out.normal = RVec(std::vector<Rat>(lp.farkas.begin(), lp.farkas.begin() + static_cast<std::ptrdiff_t>(d)));
    out.offset = place_offset(out.normal);
    return out;
}

/// Exact check of a separation witness: strict inequalities on both sides.
inline bool separates(const PointConfig& cfg, const IndexSet& m_set, const RVec& normal, const Rat& offset) {
    for (Index i = 0; i < cfg.n(); ++i) {
        const Rat v = dot(normal, cfg.point(i));
        if (contains(m_set, i) ? !(v > offset) : !(v < offset)) return false;
    }
    return true;
}

}  // namespace tvpm

#endif  // TVPM_PARTITION_SEARCH_HPP
