#ifndef TVPM_CONFIG_HPP
#define TVPM_CONFIG_HPP

#include <tvpm/linalg.hpp>

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tvpm {

using Index = std::size_t;
using IndexSet = std::vector<Index>;  // sorted, no duplicates

/// Number of points of a full instance: (r-1)(d+1)+1.
constexpr std::size_t full_size(std::size_t d, std::size_t r) { return (r - 1) * (d + 1) + 1; }

/*
 * A labeled point set in R^d together with the number of parts r.
 *
 * The constructor checks shapes and distinctness only. Whether n is the full
 * size (r-1)(d+1)+1 is a property callers test with is_full().
 */
class PointConfig {
public:
    PointConfig() = default;
    PointConfig(std::size_t d, std::size_t r, std::vector<RVec> points)
        : d_(d), r_(r), points_(std::move(points)) {
        if (d_ < 1) throw std::invalid_argument("PointConfig: dimension must be >= 1");
        if (r_ < 2) throw std::invalid_argument("PointConfig: r must be >= 2");
        if (points_.empty()) throw std::invalid_argument("PointConfig: no points");
        for (const auto& p : points_)
            if (p.dim() != d_)
                throw std::invalid_argument("PointConfig: point of dimension " + std::to_string(p.dim()) +
                                            ", expected " + std::to_string(d_));
        std::vector<const RVec*> sorted;
        for (const auto& p : points_) sorted.push_back(&p);
        std::sort(sorted.begin(), sorted.end(), [](const RVec* a, const RVec* b) {
            return std::lexicographical_compare(a->begin(), a->end(), b->begin(), b->end());
        });
        for (std::size_t i = 1; i < sorted.size(); ++i)
            if (*sorted[i] == *sorted[i - 1]) throw std::invalid_argument("PointConfig: duplicate points");
    }

    std::size_t d() const { return d_; }
    std::size_t r() const { return r_; }
    std::size_t n() const { return points_.size(); }
    bool is_full() const { return n() == full_size(d_, r_); }

    const RVec& point(Index i) const { return points_.at(i); }
    const std::vector<RVec>& points() const { return points_; }

    /// (a_i, 1) in R^{d+1}.
    RVec homogeneous(Index i) const {
        RVec h(d_ + 1);
        for (std::size_t c = 0; c < d_; ++c) h[c] = points_[i][c];
        h[d_] = 1;
        return h;
    }

    friend bool operator==(const PointConfig&, const PointConfig&) = default;

private:
    std::size_t d_ = 1;
    std::size_t r_ = 2;
    std::vector<RVec> points_;
};

/*
 * An unordered partition of {0..n-1} into nonempty parts.
 *
 * Parts are stored sorted internally and ordered by their smallest element,
 * so two partitions compare equal iff they are the same set partition.
 * Properness (every part has at most d+1 elements) is a separate predicate.
 */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<IndexSet> parts) : parts_(std::move(parts)) {
        for (auto& p : parts_) {
            if (p.empty()) throw std::invalid_argument("Partition: empty part");
            std::sort(p.begin(), p.end());
            if (std::adjacent_find(p.begin(), p.end()) != p.end())
                throw std::invalid_argument("Partition: repeated index inside a part");
        }
        std::sort(parts_.begin(), parts_.end(),
                  [](const IndexSet& a, const IndexSet& b) { return a.front() < b.front(); });
        std::size_t total = 0;
        std::set<Index> seen;
        for (const auto& p : parts_) {
            total += p.size();
            seen.insert(p.begin(), p.end());
        }
        if (seen.size() != total) throw std::invalid_argument("Partition: parts overlap");
        n_ = total;
        if (!parts_.empty() && *seen.rbegin() + 1 != n_)
            throw std::invalid_argument("Partition: indices do not cover 0..n-1");
    }

    std::size_t r() const { return parts_.size(); }
    std::size_t n() const { return n_; }
    const std::vector<IndexSet>& parts() const { return parts_; }
    const IndexSet& part(std::size_t j) const { return parts_.at(j); }

    bool is_proper(std::size_t d) const {
        return std::all_of(parts_.begin(), parts_.end(),
                           [d](const IndexSet& p) { return !p.empty() && p.size() <= d + 1; });
    }

    /// part index of every element
    std::vector<std::size_t> labels() const {
        std::vector<std::size_t> lab(n_);
        for (std::size_t j = 0; j < parts_.size(); ++j)
            for (auto i : parts_[j]) lab[i] = j;
        return lab;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<IndexSet> parts_;
    std::size_t n_ = 0;
};

/// Throws std::invalid_argument unless `p` partitions the indices of `cfg` into cfg.r() parts.
inline void check_partition_for(const PointConfig& cfg, const Partition& p) {
    if (p.n() != cfg.n())
        throw std::invalid_argument("partition covers " + std::to_string(p.n()) + " indices, config has " +
                                    std::to_string(cfg.n()));
    if (p.r() != cfg.r())
        throw std::invalid_argument("partition has " + std::to_string(p.r()) + " parts, config expects " +
                                    std::to_string(cfg.r()));
}

inline IndexSet normalize_index_set(IndexSet s, std::size_t n) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (!s.empty() && s.back() >= n)
        throw std::invalid_argument("index " + std::to_string(s.back()) + " out of range (n = " +
                                    std::to_string(n) + ")");
    return s;
}

inline IndexSet complement(const IndexSet& s, std::size_t n) {
    IndexSet out;
    std::size_t k = 0;
    for (Index i = 0; i < n; ++i) {
        if (k < s.size() && s[k] == i) {
            ++k;
            continue;
        }
        out.push_back(i);
    }
    return out;
}

inline bool contains(const IndexSet& s, Index i) { return std::binary_search(s.begin(), s.end(), i); }

/// True iff some d+1 of the given points are affinely dependent (exact).
inline bool has_affinely_dependent_subset(const std::vector<RVec>& pts, std::size_t d) {
    const std::size_t n = pts.size();
    const std::size_t k = std::min(n, d + 1);
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        // k homogeneous points are affinely independent iff the (d+1) x k matrix has rank k
        RMat m(d + 1, k);
        for (std::size_t c = 0; c < k; ++c) {
            for (std::size_t t = 0; t < d; ++t) m(t, c) = pts[idx[c]][t];
            m(d, c) = 1;
        }
        if (rank(m) < k) return true;
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t t = pos; t < k; ++t) idx[t] = idx[t - 1] + 1;
    }
    return false;
}

inline bool in_general_position(const PointConfig& cfg) {
    return !has_affinely_dependent_subset(cfg.points(), cfg.d());
}

}  // namespace tvpm

#endif  // TVPM_CONFIG_HPP
