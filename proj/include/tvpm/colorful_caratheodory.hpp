#ifndef TVPM_COLORFUL_CARATHEODORY_HPP
#define TVPM_COLORFUL_CARATHEODORY_HPP

#include <tvpm/linalg.hpp>
#include <tvpm/min_norm.hpp>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tvpm {

using ColorSets = std::vector<std::vector<RVec>>;

/*
 * One element per color and convex weights with sum_i weights_i * s_i = 0,
 * where s_i = sets[i][choice[i]].
 */
struct Transversal {
    std::vector<std::size_t> choice;
    std::vector<Rat> weights;
};

struct PivotStep {
    std::size_t iteration = 0;
    std::vector<std::size_t> choice;
    RVec w;
    Rat norm2;
};

using PivotObserver = std::function<void(const PivotStep&)>;

struct PivotRun {
    Transversal transversal;
    std::vector<Rat> norm_history;  // |w|^2 at every evaluated transversal, last one is 0
};

/*
 * Colourful Caratheodory by minimum-norm pivoting.
 *
 * Given n color sets in R^{n-1} whose convex hulls all contain the origin,
 * repeat: w = minimum-norm point of the current transversal; stop if w = 0.
 * Otherwise some color carries zero weight in w's representation (a nonzero
 * minimum-norm point lies on a proper face), and that color's element is
 * replaced by the element of its set with the most negative <w, s>, which is
 * <= 0 because 0 is in the set's hull. |w| strictly decreases every step.
 *
 * Ties: smallest zero-weight color, then most negative inner product, then
 * smallest element index.
 */
inline PivotRun colorful_caratheodory(const ColorSets& sets, std::vector<std::size_t> initial,
                                      const PivotObserver& observer = {}) {
    const std::size_t n = sets.size();
    if (n == 0) throw std::invalid_argument("colorful_caratheodory: no colors");
    if (initial.size() != n) throw std::invalid_argument("colorful_caratheodory: initial choice size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (sets[i].empty()) throw std::invalid_argument("colorful_caratheodory: empty color set");
        if (initial[i] >= sets[i].size()) throw std::invalid_argument("colorful_caratheodory: bad initial choice");
        if (!min_norm_point(sets[i]).w.is_zero())
            throw std::invalid_argument("colorful_caratheodory: origin not in the hull of color " +
                                        std::to_string(i));
    }

    PivotRun run;
    std::vector<std::size_t> choice = std::move(initial);
    std::vector<RVec> current(n);
    for (std::size_t iter = 0;; ++iter) {
        for (std::size_t i = 0; i < n; ++i) current[i] = sets[i][choice[i]];
        auto mn = min_norm_point(current);
        Rat nn = norm2(mn.w);
        if (!run.norm_history.empty() && !(nn < run.norm_history.back()))
            throw std::logic_error("colorful_caratheodory: norm did not decrease");
        run.norm_history.push_back(nn);
        if (observer) observer(PivotStep{iter, choice, mn.w, nn});
        if (nn.is_zero()) {
            run.transversal = Transversal{choice, std::move(mn.weights)};
            return run;
        }

        std::size_t color = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (mn.weights[i].is_zero()) {
                color = i;
                break;
            }
        }
        if (color == n) throw std::logic_error("colorful_caratheodory: no zero-weight color to pivot on");

        std::size_t pick = 0;
        Rat lowest = dot(mn.w, sets[color][0]);
        for (std::size_t j = 1; j < sets[color].size(); ++j) {
            Rat v = dot(mn.w, sets[color][j]);
            if (v < lowest) {
                lowest = std::move(v);
                pick = j;
            }
        }
        if (lowest.sign() > 0) throw std::logic_error("colorful_caratheodory: no element with <w, s> <= 0");
        choice[color] = pick;
    }
}

}  // namespace tvpm

#endif  // TVPM_COLORFUL_CARATHEODORY_HPP
