#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force reference routes used to cross-check the solvers: a
 *        dense logarithmic grid search over b (no bisection anywhere), and
 *        an exhaustive window sweep over a set much larger than the
 *        dominating one.
 */

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "omseq/norm.hpp"
#include "omseq/sequence.hpp"
#include "omseq/weight.hpp"
#include "omseq/young.hpp"

namespace omseq::oracle {

/// Window norm located by repeatedly zooming a log-spaced grid onto the
/// point where the modular crosses 1. Returns the smallest grid point with
/// modular <= 1; three passes of 256 points resolve the crossing to a
/// relative width around 4e-8.
inline double grid_window_norm(const FiniteSequence& x, const Window& w, const SYoungSpec& f,
                               const WeightSpec& wt, int passes = 3, int points = 256) {
    const auto content = window_slice(x, w);
    if (std::all_of(content.begin(), content.end(), [](double v) { return v == 0.0; })) return 0.0;

    auto mu = [&](double b) { return modular(x, w, b, f, wt); };
    double hi = 1.0;
    int guard = 0;
    while (!(mu(hi) <= 1.0)) {
        hi *= 2.0;
        if (++guard > 4000) throw std::runtime_error("grid oracle: no upper bracket");
    }
    double lo = 0.5 * hi;
    while (lo > 0.0 && mu(lo) <= 1.0) {
        hi = lo;
        lo *= 0.5;
        if (++guard > 4000) throw std::runtime_error("grid oracle: no lower bracket");
    }
    if (lo == 0.0) return hi;

    for (int pass = 0; pass < passes; ++pass) {
        const double ratio = hi / lo;
        double below = hi;
        double above = lo;
        for (int i = 1; i <= points; ++i) {
            const double b = lo * std::pow(ratio, static_cast<double>(i) / points);
            if (mu(b) <= 1.0) {
                below = b;
                break;
            }
            above = b;
        }
        hi = below;
        lo = above;
    }
    return hi;
}

/// Global norm by exhaustive per-window search over a set far larger than
/// the dominating one: centers across the support hull widened by twice the
/// support width on each side, half-widths up to three times the width.
inline double sweep_global_norm(const FiniteSequence& x, const SYoungSpec& f,
                                const WeightSpec& wt) {
    const auto supp = x.support();
    if (!supp) return 0.0;
    const long long width = supp->second - supp->first + 1;
    double best = 0.0;
    for (long long N = 0; N <= 3 * width; ++N)
        for (long long m = supp->first - 2 * width; m <= supp->second + 2 * width; ++m)
            best = std::max(best, window_norm(x, Window{m, N}, f, wt));
    return best;
}

}  // namespace omseq::oracle
