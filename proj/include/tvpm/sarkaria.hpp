#ifndef TVPM_SARKARIA_HPP
#define TVPM_SARKARIA_HPP

#include <tvpm/affine_system.hpp>
#include <tvpm/colorful_caratheodory.hpp>
#include <tvpm/config.hpp>
#include <tvpm/partition_search.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tvpm {

/// r vectors in R^{r-1} whose only linear dependences are multiples of v_1 + ... + v_r = 0.
struct CompanionSimplex {
    std::vector<RVec> vectors;
};

/// e_1, ..., e_{r-1} and -(e_1 + ... + e_{r-1}).
inline CompanionSimplex companion_simplex(std::size_t r) {
    if (r < 2) throw std::invalid_argument("companion_simplex: r must be >= 2");
    CompanionSimplex s;
    for (std::size_t j = 0; j + 1 < r; ++j) {
        RVec v(r - 1);
        v[j] = 1;
        s.vectors.push_back(std::move(v));
    }
    RVec last(r - 1);
    for (auto& x : last) x = -1;
    s.vectors.push_back(std::move(last));
    return s;
}

/*
 * Signed tensor lift of a full configuration:
 *   b_i = (a_i, 1) for i outside M, (-a_i, -1) for i in M,
 *   S_i = { v_j (x) b_i : j = 0..r-1 } in R^{(r-1)(d+1)} = R^{n-1}.
 */
struct LiftedSystem {
    PointConfig source;
    IndexSet m_set;
    CompanionSimplex simplex;
    std::vector<RVec> lifted;  // b_i
    ColorSets sets;            // S_i
};

inline LiftedSystem lift(const PointConfig& cfg, IndexSet m_set) {
    require_full(cfg, "lift");
    LiftedSystem ls;
    ls.source = cfg;
    ls.m_set = normalize_index_set(std::move(m_set), cfg.n());
    ls.simplex = companion_simplex(cfg.r());
    for (Index i = 0; i < cfg.n(); ++i) {
        RVec b = cfg.homogeneous(i);
        if (contains(ls.m_set, i)) b = -b;
        std::vector<RVec> s;
        RVec sum((cfg.r() - 1) * (cfg.d() + 1));
        for (const auto& v : ls.simplex.vectors) {
            s.push_back(tensor(v, b));
            sum += s.back();
        }
        if (!sum.is_zero()) throw std::logic_error("lift: uniform average of S_i is not the origin");
        ls.lifted.push_back(std::move(b));
        ls.sets.push_back(std::move(s));
    }
    return ls;
}

/// j(i) = i mod r (zero-based).
inline std::vector<std::size_t> default_initial_choice(std::size_t n, std::size_t r) {
    std::vector<std::size_t> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = i % r;
    return c;
}

inline PivotRun colorful_caratheodory(const LiftedSystem& ls, const PivotObserver& observer = {}) {
    return colorful_caratheodory(ls.sets, default_initial_choice(ls.sets.size(), ls.source.r()), observer);
}

enum class Alternative { InM, Complement };

inline const char* to_string(Alternative a) { return a == Alternative::InM ? "in_m" : "complement"; }

enum class RecoverKind { Certificate, SeparationViolated, DegenerateGamma };

inline const char* to_string(RecoverKind k) {
    switch (k) {
        case RecoverKind::Certificate: return "certificate";
        case RecoverKind::SeparationViolated: return "separation_violated";
        case RecoverKind::DegenerateGamma: return "degenerate_gamma";
    }
    return "?";
}

/*
 * Evidence for an empty part: inside a nonempty part the signed coefficients
 * sum to the zero vector, so conv(part & M) and conv(part \ M) share `point`.
 */
struct SeparationEvidence {
    std::size_t part = 0;
    RVec point;
    std::vector<Rat> weights_m;     // convex weights on part & M
    std::vector<Rat> weights_rest;  // convex weights on part \ M
};

struct RecoverResult {
    RecoverKind kind = RecoverKind::DegenerateGamma;
    std::vector<IndexSet> raw_parts;         // A_j = {i : j(i) = j}, possibly empty
    std::optional<Partition> partition;      // set when no part is empty
    bool proper = false;
    std::optional<AffineCertificate> cert;   // Certificate only
    std::optional<Alternative> alternative;  // Certificate only
    std::optional<SeparationEvidence> evidence;
    Rat gamma;
};

inline RecoverResult recover(const LiftedSystem& ls, const Transversal& t) {
    const auto& cfg = ls.source;
    const std::size_t n = cfg.n();
    const std::size_t r = cfg.r();
    const std::size_t d = cfg.d();
    if (t.choice.size() != n || t.weights.size() != n)
        throw std::invalid_argument("recover: transversal does not match the lifted system");

    RecoverResult out;
    out.raw_parts.assign(r, {});
    std::vector<Rat> alpha(n);
    for (Index i = 0; i < n; ++i) {
        out.raw_parts.at(t.choice[i]).push_back(i);
        alpha[i] = contains(ls.m_set, i) ? -t.weights[i] : t.weights[i];
    }

    // Per-part sums of alpha_i (a_i, 1) must all coincide.
    std::vector<RVec> sums(r, RVec(d + 1));
    for (std::size_t j = 0; j < r; ++j)
        for (Index i : out.raw_parts[j]) sums[j] += cfg.homogeneous(i) * alpha[i];
    for (std::size_t j = 1; j < r; ++j)
        if (sums[j] != sums[0]) throw std::logic_error("recover: per-part lifted sums differ");

    for (std::size_t j = 0; j < r; ++j) {
        if (!out.raw_parts[j].empty()) continue;
        out.kind = RecoverKind::SeparationViolated;
        for (std::size_t h = 0; h < r; ++h) {
            Rat pos, neg;  // sums of alpha off M (>= 0) and on M (<= 0) inside part h
            for (Index i : out.raw_parts[h]) (contains(ls.m_set, i) ? neg : pos) += alpha[i];
            if (pos.is_zero()) continue;
            SeparationEvidence ev;
            ev.part = h;
            ev.point = RVec(d);
            ev.weights_m.assign(n, Rat());
            ev.weights_rest.assign(n, Rat());
            for (Index i : out.raw_parts[h]) {
                if (contains(ls.m_set, i)) {
                    ev.weights_m[i] = alpha[i] / neg;
                    ev.point += cfg.point(i) * ev.weights_m[i];
                } else {
                    ev.weights_rest[i] = alpha[i] / pos;
                }
            }
            out.evidence = std::move(ev);
            break;
        }
        return out;
    }

    out.partition = Partition(out.raw_parts);
    out.proper = out.partition->is_proper(d);
    out.gamma = sums[0][d];
    if (out.gamma.is_zero()) {
        out.kind = RecoverKind::DegenerateGamma;
        return out;
    }

    AffineCertificate cert;
    cert.gamma = out.gamma;
    cert.z = RVec(d);
    for (std::size_t c = 0; c < d; ++c) cert.z[c] = sums[0][c] / out.gamma;
    cert.alpha.resize(n);
    for (Index i = 0; i < n; ++i) cert.alpha[i] = alpha[i] / out.gamma;
    refresh_signs(cert);

    out.kind = RecoverKind::Certificate;
    out.alternative = out.gamma.sign() > 0 ? Alternative::InM : Alternative::Complement;
    out.cert = std::move(cert);
    return out;
}

struct PlusMinusResult {
    RecoverResult recovered;
    PivotRun run;
    bool separated = true;  // conv M and conv(A \ M) disjoint
};

/*
 * Lift, pivot to a transversal through the origin, and read off the partition.
 * A non-separated M is not rejected; `separated` reports it for the caller.
 */
inline PlusMinusResult tverberg_pm(const PointConfig& cfg, IndexSet m_set, const PivotObserver& observer = {}) {
    require_full(cfg, "tverberg_pm");
    m_set = normalize_index_set(std::move(m_set), cfg.n());
    PlusMinusResult out;
    out.separated = check_separation(cfg, m_set).separated;
    const auto ls = lift(cfg, m_set);
    out.run = colorful_caratheodory(ls, observer);
    out.recovered = recover(ls, out.run.transversal);
    return out;
}

}  // namespace tvpm

#endif  // TVPM_SARKARIA_HPP
