#pragma once

/**
 * @file young.hpp
 * @brief s-Young function families: evaluation, generalized inverse, and
 *        sampled validation of the structural inequalities.
 *
 * An s-Young function is a continuous Phi : [0,inf) -> [0,inf) with
 * Phi(0) = 0, Phi(t) -> inf, positive away from the origin, satisfying the
 * s-convexity inequality
 *
 *     Phi(a*x + b*y) <= a^s * Phi(x) + b^s * Phi(y)   whenever a^s + b^s = 1
 *
 * for a fixed exponent s in (0,1]. Three closed families are provided:
 *
 *     power:          Phi(t) = t^p           (s-convex for s <= min(p, 1))
 *     exp_minus_one:  Phi(t) = e^t - 1       (convex, hence any s works)
 *     power_log:      Phi(t) = t^p * ln(1+t) (convex for p >= 1)
 *
 * Each SYoungSpec declares the s it claims; validators test the inequality
 * at that s on a finite sampling grid and report witnesses on failure.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "omseq/validation.hpp"

namespace omseq {

enum class YoungFamily { power, exp_minus_one, power_log };

/// Parametric description of an s-Young function.
struct SYoungSpec {
    YoungFamily family = YoungFamily::power;
    double p = 1.0;  ///< exponent; ignored by exp_minus_one
    double s = 1.0;  ///< declared s-convexity exponent, in (0,1]

    static SYoungSpec power(double p, double s) {
        return SYoungSpec{YoungFamily::power, p, s};
    }
    static SYoungSpec exp_minus_one(double s) {
        return SYoungSpec{YoungFamily::exp_minus_one, 1.0, s};
    }
    static SYoungSpec power_log(double p, double s) {
        return SYoungSpec{YoungFamily::power_log, p, s};
    }
};

inline const char* family_name(YoungFamily f) {
    switch (f) {
        case YoungFamily::power: return "power";
        case YoungFamily::exp_minus_one: return "exp_minus_one";
        case YoungFamily::power_log: return "power_log";
    }
    return "?";
}

/// Cheap parameter-range check (exponent positive, s in (0,1]). The sampled
/// validator covers the actual inequalities.
inline bool structurally_valid(const SYoungSpec& f, std::string* why = nullptr) {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if (!(f.s > 0.0 && f.s <= 1.0)) return fail("s out of (0,1]");
    if (f.family != YoungFamily::exp_minus_one && !(f.p > 0.0))
        return fail("exponent p must be positive");
    if (f.family == YoungFamily::power && !(f.s <= std::min(f.p, 1.0)))
        return fail("power family requires s <= min(p, 1)");
    return true;
}

inline void require_structural(const SYoungSpec& f) {
    std::string why;
    if (!structurally_valid(f, &why)) throw std::domain_error("SYoungSpec: " + why);
}

/// Phi(t). Exact zero at t = 0 for every family.
inline double evaluate(const SYoungSpec& f, double t) {
    if (!(t >= 0.0)) throw std::domain_error("evaluate: t must be nonnegative");
    switch (f.family) {
        case YoungFamily::power:
            if (!(f.p > 0.0)) throw std::domain_error("evaluate: p must be positive");
            return t == 0.0 ? 0.0 : std::pow(t, f.p);
        case YoungFamily::exp_minus_one:
            return std::expm1(t);
        case YoungFamily::power_log:
            if (!(f.p > 0.0)) throw std::domain_error("evaluate: p must be positive");
            return t == 0.0 ? 0.0 : std::pow(t, f.p) * std::log1p(t);
    }
    throw std::logic_error("evaluate: unknown family");
}

namespace detail {

// Monotone bisection for the generalized inverse of a continuous, strictly
// increasing Phi: the infimum of { r >= 0 : Phi(r) > x } is the unique root
// of Phi(r) = x. Returns the upper bracket end, so Phi(result) >= x up to
// the relative tolerance.
inline double invert_by_bisection(const SYoungSpec& f, double x, double rel_tol) {
    double hi = 1.0;
    int steps = 0;
    while (evaluate(f, hi) <= x) {
        hi *= 2.0;
        if (++steps > 4000) throw std::runtime_error("inverse: no upper bracket");
    }
    double lo = hi * 0.5;
    while (lo > 0.0 && evaluate(f, lo) > x) {
        hi = lo;
        lo *= 0.5;
        if (++steps > 4000) throw std::runtime_error("inverse: no lower bracket");
    }
    for (int i = 0; i < 200 && (hi - lo) > rel_tol * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (evaluate(f, mid) > x ? hi : lo) = mid;
    }
    return hi;
}

}  // namespace detail

/// Generalized inverse Phi^{-1}(x) = inf{ r >= 0 : Phi(r) > x }. Closed form
/// where the family admits one, monotone bisection otherwise (relative
/// tolerance 1e-12).
inline double inverse(const SYoungSpec& f, double x) {
    if (!(x >= 0.0)) throw std::domain_error("inverse: x must be nonnegative");
    if (x == 0.0) return 0.0;
    switch (f.family) {
        case YoungFamily::power:
            if (!(f.p > 0.0)) throw std::domain_error("inverse: p must be positive");
            return std::pow(x, 1.0 / f.p);
        case YoungFamily::exp_minus_one:
            return std::log1p(x);
        case YoungFamily::power_log:
            if (!(f.p > 0.0)) throw std::domain_error("inverse: p must be positive");
            return detail::invert_by_bisection(f, x, 1e-12);
    }
    throw std::logic_error("inverse: unknown family");
}

/// Finite sample sets driving validate_s_young. The growth probe walks t
/// upward from growth_t_start until Phi clears growth_threshold, giving
/// slowly divergent families (small power exponents) room to get there.
struct SamplingGrid {
    std::vector<double> t_samples;
    std::vector<std::pair<double, double>> xy_pairs;
    std::vector<double> a_samples;
    double growth_t_start = 1e9;
    double growth_threshold = 1e6;

    static SamplingGrid default_grid() {
        SamplingGrid g;
        g.t_samples = {0.0, 1e-6, 1e-3, 0.05, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 5.0, 6.0};
        const std::vector<double> pts = {0.0, 0.25, 0.5, 1.0, 2.0, 3.0, 4.0, 6.0};
        for (double x : pts)
            for (double y : pts) g.xy_pairs.emplace_back(x, y);
        g.a_samples = {0.0, 0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 1.0};
        return g;
    }

    static SamplingGrid randomized(std::uint64_t seed, std::size_t n_points = 24) {
        SamplingGrid g = default_grid();
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> u(0.0, 6.0);
        std::uniform_real_distribution<double> ua(0.0, 1.0);
        for (std::size_t i = 0; i < n_points; ++i) {
            g.t_samples.push_back(u(rng));
            g.xy_pairs.emplace_back(u(rng), u(rng));
            g.a_samples.push_back(ua(rng));
        }
        std::sort(g.t_samples.begin(), g.t_samples.end());
        return g;
    }
};

// Additive slack for inequality checks on values of moderate magnitude.
inline constexpr double kInequalitySlack = 1e-12;

/// Checks, at all sampled points: Phi(0) = 0, positivity away from 0,
/// monotonicity, divergence, and the s-convexity inequality at the declared
/// s. A failing function yields a report with witnesses, never an error.
inline ValidationReport validate_s_young(const SYoungSpec& f,
                                         const SamplingGrid& grid = SamplingGrid::default_grid()) {
    ValidationReport report;

    if (!(f.s > 0.0 && f.s <= 1.0)) {
        report.add("parameter-range", {f.s}, f.s, 1.0);
        return report;
    }
    if (f.family != YoungFamily::exp_minus_one && !(f.p > 0.0)) {
        report.add("parameter-range", {f.p}, f.p, 0.0);
        return report;
    }

    if (evaluate(f, 0.0) != 0.0)
        report.add("zero-at-origin", {0.0}, evaluate(f, 0.0), 0.0);

    std::vector<double> ts = grid.t_samples;
    std::sort(ts.begin(), ts.end());
    for (double t : ts) {
        if (t > 0.0 && !(evaluate(f, t) > 0.0))
            report.add("positive-away-from-zero", {t}, evaluate(f, t), 0.0);
    }
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        const double lhs = evaluate(f, ts[i]);
        const double rhs = evaluate(f, ts[i + 1]);
        if (lhs > rhs + kInequalitySlack)
            report.add("nondecreasing", {ts[i], ts[i + 1]}, lhs, rhs);
    }

    // Divergence probe: keep squaring t until Phi clears the threshold.
    {
        double t = grid.growth_t_start;
        double v = evaluate(f, t);
        while (!(v > grid.growth_threshold) && t < 1e300) {
            t = std::min(t * t, 1e300);
            v = evaluate(f, t);
        }
        if (!(v > grid.growth_threshold))
            report.add("divergence", {t}, v, grid.growth_threshold);
    }

    for (double a : grid.a_samples) {
        if (!(a >= 0.0 && a <= 1.0)) continue;
        const double as = std::pow(a, f.s);
        const double bs = std::max(0.0, 1.0 - as);
        const double b = std::pow(bs, 1.0 / f.s);
        for (const auto& [x, y] : grid.xy_pairs) {
            const double lhs = evaluate(f, a * x + b * y);
            const double rhs = as * evaluate(f, x) + bs * evaluate(f, y);
            if (lhs > rhs + kInequalitySlack)
                report.add("s-convexity", {x, y, a, b}, lhs, rhs);
        }
    }
    return report;
}

/// Verifies Phi(a*t) <= a^s * Phi(t) at each sample (a, t), 0 <= a <= 1.
inline ValidationReport check_scaling_inequality(const SYoungSpec& f,
                                                 const std::vector<std::pair<double, double>>& samples) {
    ValidationReport report;
    for (const auto& [a, t] : samples) {
        if (!(a >= 0.0 && a <= 1.0)) throw std::domain_error("check_scaling_inequality: a out of [0,1]");
        if (!(t >= 0.0)) throw std::domain_error("check_scaling_inequality: t negative");
        const double lhs = evaluate(f, a * t);
        const double rhs = std::pow(a, f.s) * evaluate(f, t);
        if (lhs > rhs + kInequalitySlack) report.add("scaling", {a, t}, lhs, rhs);
    }
    return report;
}

/// Verifies that omega(t) = Phi(t) / t^s is nondecreasing along a strictly
/// increasing positive sample sequence. Phi(t) = t^s makes omega constant,
/// so the check is for nondecreasing rather than strictly increasing.
inline ValidationReport check_ratio_monotone(const SYoungSpec& f,
                                             const std::vector<double>& samples) {
    for (double t : samples)
        if (!(t > 0.0)) throw std::domain_error("check_ratio_monotone: samples must be positive");
    for (std::size_t i = 0; i + 1 < samples.size(); ++i)
        if (!(samples[i] < samples[i + 1]))
            throw std::domain_error("check_ratio_monotone: samples must be strictly increasing");

    ValidationReport report;
    auto omega = [&](double t) { return evaluate(f, t) / std::pow(t, f.s); };
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
        const double lhs = omega(samples[i]);
        const double rhs = omega(samples[i + 1]);
        if (lhs > rhs + kInequalitySlack)
            report.add("ratio-monotone", {samples[i], samples[i + 1]}, lhs, rhs);
    }
    return report;
}

}  // namespace omseq
