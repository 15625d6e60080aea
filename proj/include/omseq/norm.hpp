#pragma once

/**
 * @file norm.hpp
 * @brief The windowed modular, the per-window Luxemburg-type quasi-norm,
 *        and the global quasi-norm (supremum over all windows).
 *
 * For a window S of cardinality 2N+1 the modular at level b > 0 is
 *
 *     mu(b) = phi(2N+1)/(2N+1) * sum_{k in S} Phi(|x_k| / b),
 *
 * a continuous nonincreasing function of b that blows up as b -> 0+ (when
 * the window holds a nonzero entry) and vanishes as b -> inf. The window
 * norm is inf{ b > 0 : mu(b) <= 1 }, found by bracketing and bisection;
 * the global norm is the supremum of window norms over all centers m in Z
 * and half-widths N >= 0.
 *
 * The supremum is exact over a finite dominating set of windows:
 *  (i)  clamping the center into the support hull [lo, hi] can only enlarge
 *       the window's intersection with the support at an unchanged weight
 *       factor, so off-hull centers are dominated;
 *  (ii) once a window covers the support, growing N leaves the sum fixed
 *       while phi(2N+1)/(2N+1) is nonincreasing, so the modular - and with
 *       it the window norm - is nonincreasing in N. Every center in the
 *       hull covers the support by N = hi - lo.
 * Hence m in [lo, hi] and N in [0, hi - lo] suffice.
 */

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "omseq/sequence.hpp"
#include "omseq/validation.hpp"
#include "omseq/weight.hpp"
#include "omseq/young.hpp"

namespace omseq {

/// Bracketing walked past its step budget without trapping the unit
/// crossing; the usual cause is a Phi that fails to diverge or to vanish.
class nonconvergence_error : public std::runtime_error {
public:
    explicit nonconvergence_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NormResult {
    double value = 0.0;
    Window witness{};
    int iterations = 0;
    double residual = 0.0;
};

/// phi(2N+1)/(2N+1) * sum_{k in S} Phi(|x_k| / b).
inline double modular(const FiniteSequence& x, const Window& w, double b, const SYoungSpec& f,
                      const WeightSpec& wt) {
    if (!(b > 0.0)) throw std::domain_error("modular: b must be positive");
    if (w.half_width < 0) throw std::domain_error("modular: negative half-width");
    const double factor =
        weight_eval(wt, w.cardinality()) / static_cast<double>(w.cardinality());
    const long long klo = std::max(w.lo(), x.offset);
    const long long khi =
        std::min(w.hi(), x.offset + static_cast<long long>(x.values.size()) - 1);
    double sum = 0.0;
    for (long long k = klo; k <= khi; ++k) {
        const double v = std::fabs(x.values[static_cast<std::size_t>(k - x.offset)]);
        if (v != 0.0) sum += evaluate(f, v / b);
    }
    return factor * sum;
}

namespace detail {

struct CrossingResult {
    double value = 0.0;
    int iterations = 0;
};

/// Smallest b with g(b) <= 1, for continuous nonincreasing g. Doubles b
/// upward until g <= 1, halves downward until g > 1, then bisects keeping
/// g(lo) > 1 >= g(hi); the upper end is returned, so g(value) <= 1.
///
/// The upward walk failing (budget spent or b overflowing) means g exceeds
/// 1 at every representable level: the defining set is empty, which a valid
/// Phi rules out. The downward walk underflowing to 0 is not an error: then
/// g <= 1 on all of (0, inf) and the infimum is genuinely at the bottom of
/// the representable range.
template <class G>
CrossingResult solve_unit_crossing(G&& g, double rel_tol, const char* who) {
    double hi = 1.0;
    int moves = 0;
    while (!(g(hi) <= 1.0)) {
        hi *= 2.0;
        if (!std::isfinite(hi) || ++moves > 2000)
            throw nonconvergence_error(std::string(who) +
                                       ": modular never reaches 1 (does Phi diverge?)");
    }
    double lo = 0.5 * hi;
    while (lo > 0.0 && g(lo) <= 1.0) {
        hi = lo;
        lo *= 0.5;
        if (++moves > 2000)
            throw nonconvergence_error(std::string(who) +
                                       ": bracketing budget exhausted below b = 1");
    }
    CrossingResult out;
    while ((hi - lo) > rel_tol * hi && out.iterations < 200) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) <= 1.0)
            hi = mid;
        else
            lo = mid;
        ++out.iterations;
    }
    out.value = hi;
    return out;
}

}  // namespace detail

struct WindowNormInfo {
    double value = 0.0;
    int iterations = 0;
    double residual = 0.0;
};

/// Window norm with solver diagnostics. All-zero window content returns
/// exactly 0 before bracketing, which could not terminate on it.
inline WindowNormInfo window_norm_info(const FiniteSequence& x, const Window& w,
                                       const SYoungSpec& f, const WeightSpec& wt,
                                       double rel_tol = 1e-12) {
    require_structural(f);
    require_structural(wt);
    if (!(rel_tol > 0.0)) throw std::domain_error("window_norm: tolerance must be positive");
    if (w.half_width < 0) throw std::domain_error("window_norm: negative half-width");

    const long long klo = std::max(w.lo(), x.offset);
    const long long khi =
        std::min(w.hi(), x.offset + static_cast<long long>(x.values.size()) - 1);
    bool all_zero = true;
    for (long long k = klo; k <= khi && all_zero; ++k)
        if (x.values[static_cast<std::size_t>(k - x.offset)] != 0.0) all_zero = false;
    if (all_zero) return {};

    const auto sol = detail::solve_unit_crossing(
        [&](double b) { return modular(x, w, b, f, wt); }, rel_tol, "window_norm");
    return {sol.value, sol.iterations, std::fabs(modular(x, w, sol.value, f, wt) - 1.0)};
}

/// inf{ b > 0 : modular(x, w, b) <= 1 }, or exactly 0 for all-zero content.
inline double window_norm(const FiniteSequence& x, const Window& w, const SYoungSpec& f,
                          const WeightSpec& wt, double rel_tol = 1e-12) {
    return window_norm_info(x, w, f, wt, rel_tol).value;
}

/// Supremum of window norms over all m in Z, N >= 0, computed exactly over
/// the finite dominating set described in the header comment.
///
/// Rather than solving one bisection per window, the solver runs a single
/// bracket-and-bisect on F(b) = max over dominating windows of modular(b):
/// F is again continuous and nonincreasing, and inf{ b : F(b) <= 1 } equals
/// sup_w inf{ b : mu_w(b) <= 1 }, because F(b) <= 1 holds exactly when b is
/// an upper bound for every window's norm. Per evaluation of F the Phi
/// values are computed once per support index and each window sum becomes a
/// prefix-sum difference.
inline NormResult global_norm(const FiniteSequence& x, const SYoungSpec& f, const WeightSpec& wt,
                              double rel_tol = 1e-12) {
    require_structural(f);
    require_structural(wt);
    if (!(rel_tol > 0.0)) throw std::domain_error("global_norm: tolerance must be positive");

    const auto supp = x.support();
    if (!supp) return NormResult{0.0, Window{0, 0}, 0, 0.0};
    const long long lo = supp->first;
    const long long hi = supp->second;
    const std::size_t n = static_cast<std::size_t>(hi - lo + 1);
    const long long max_half_width = hi - lo;

    std::vector<double> mag(n);
    for (std::size_t i = 0; i < n; ++i) mag[i] = std::fabs(x.at(lo + static_cast<long long>(i)));

    std::vector<double> wfac(n);
    for (long long N = 0; N <= max_half_width; ++N)
        wfac[static_cast<std::size_t>(N)] =
            weight_eval(wt, 2 * N + 1) / static_cast<double>(2 * N + 1);

    std::vector<double> phi(n), pre(n + 1, 0.0);
    auto max_modular = [&](double b, Window* arg) {
        for (std::size_t i = 0; i < n; ++i) phi[i] = mag[i] != 0.0 ? evaluate(f, mag[i] / b) : 0.0;
        for (std::size_t i = 0; i < n; ++i) pre[i + 1] = pre[i] + phi[i];
        double best = -1.0;
        Window best_w{};
        for (long long N = 0; N <= max_half_width; ++N) {
            const double factor = wfac[static_cast<std::size_t>(N)];
            for (long long m = lo; m <= hi; ++m) {
                const std::size_t a = static_cast<std::size_t>(std::max(lo, m - N) - lo);
                const std::size_t z = static_cast<std::size_t>(std::min(hi, m + N) - lo);
                const double mu = factor * (pre[z + 1] - pre[a]);
                if (mu > best) {
                    best = mu;
                    best_w = Window{m, N};
                }
            }
        }
        if (arg) *arg = best_w;
        return best;
    };

    const auto sol = detail::solve_unit_crossing(
        [&](double b) { return max_modular(b, nullptr); }, rel_tol, "global_norm");
    Window witness{};
    const double at_value = max_modular(sol.value, &witness);
    return NormResult{sol.value, witness, sol.iterations, std::fabs(at_value - 1.0)};
}

/// ((D+1) / (D(D-1)))^{1/p}: the global norm of the untruncated geometric
/// example under Phi(t) = t^p with the identity weight.
inline double geometric_closed_form(double D, double p) {
    if (!(D > 1.0)) throw std::domain_error("geometric_closed_form: D must exceed 1");
    if (!(p > 0.0)) throw std::domain_error("geometric_closed_form: p must be positive");
    return std::pow((D + 1.0) / (D * (D - 1.0)), 1.0 / p);
}

/// The centered window (m = 0) norm of the untruncated geometric example at
/// half-width N; approaches the closed form from below as N grows.
inline double geometric_partial_closed_form(double D, double p, long long N) {
    if (!(D > 1.0)) throw std::domain_error("geometric_partial_closed_form: D must exceed 1");
    if (!(p > 0.0)) throw std::domain_error("geometric_partial_closed_form: p must be positive");
    if (N < 0) throw std::domain_error("geometric_partial_closed_form: N must be nonnegative");
    const double denom = D * (D - 1.0);
    const double base = (D + 1.0) / denom - 2.0 * std::pow(1.0 / D, static_cast<double>(N)) / denom;
    return std::pow(base, 1.0 / p);
}

/// Verifies the coordinate extraction inequality
///     sup_j |x_j| <= ||x|| * Phi^{-1}(1 / phi(1)),
/// which follows from the N = 0 windows. Witnesses index, |x_j|, and bound.
inline ValidationReport coordinate_bound_check(const FiniteSequence& x, const SYoungSpec& f,
                                               const WeightSpec& wt) {
    ValidationReport report;
    const double norm = global_norm(x, f, wt).value;
    const double bound = norm * inverse(f, 1.0 / weight_eval(wt, 1));
    for (std::size_t i = 0; i < x.values.size(); ++i) {
        const double v = std::fabs(x.values[i]);
        if (v > bound + 1e-9)
            report.add("coordinate-bound",
                       {static_cast<double>(x.offset + static_cast<long long>(i)), v}, v, bound);
    }
    return report;
}

}  // namespace omseq
