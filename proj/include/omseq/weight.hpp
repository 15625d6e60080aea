#pragma once

/**
 * @file weight.hpp
 * @brief Window weights phi on the odd integers: nondecreasing, with
 *        phi(n)/n nonincreasing.
 *
 * Weights scale each window's averaged modular by phi(2N+1)/(2N+1). The
 * class is closed under the built-in families (identity, n^theta with
 * theta in [0,1], positive constants), so membership is enforced by
 * parameter ranges and double-checked by the sampled validator.
 */

#include <cmath>
#include <stdexcept>
#include <string>

#include "omseq/validation.hpp"

namespace omseq {

enum class WeightFamily { identity, power, constant };

struct WeightSpec {
    WeightFamily family = WeightFamily::identity;
    double theta = 1.0;  ///< exponent for the power family, in [0,1]
    double c = 1.0;      ///< value of the constant family, positive

    static WeightSpec identity() { return WeightSpec{WeightFamily::identity, 1.0, 1.0}; }
    static WeightSpec power(double theta) { return WeightSpec{WeightFamily::power, theta, 1.0}; }
    static WeightSpec constant(double c) { return WeightSpec{WeightFamily::constant, 1.0, c}; }
};

inline const char* family_name(WeightFamily f) {
    switch (f) {
        case WeightFamily::identity: return "identity";
        case WeightFamily::power: return "power";
        case WeightFamily::constant: return "constant";
    }
    return "?";
}

inline bool structurally_valid(const WeightSpec& w, std::string* why = nullptr) {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if (w.family == WeightFamily::power && !(w.theta >= 0.0 && w.theta <= 1.0))
        return fail("theta out of [0,1]");
    if (w.family == WeightFamily::constant && !(w.c > 0.0)) return fail("c must be positive");
    return true;
}

inline void require_structural(const WeightSpec& w) {
    std::string why;
    if (!structurally_valid(w, &why)) throw std::domain_error("WeightSpec: " + why);
}

/// phi(n) for odd n >= 1. The domain is exactly the odd integers; even
/// arguments are an error, not an interpolation. Out-of-range parameters
/// evaluate normally so the validator can exhibit their failure.
inline double weight_eval(const WeightSpec& w, long long n) {
    if (n < 1 || n % 2 == 0) throw std::domain_error("weight_eval: n must be an odd positive integer");
    switch (w.family) {
        case WeightFamily::identity: return static_cast<double>(n);
        case WeightFamily::power: return std::pow(static_cast<double>(n), w.theta);
        case WeightFamily::constant: return w.c;
    }
    throw std::logic_error("weight_eval: unknown family");
}

/// Checks positivity, phi nondecreasing, and phi(n)/n nonincreasing over
/// n = 1, 3, ..., n_max, reporting witnesses on failure.
inline ValidationReport validate_weight(const WeightSpec& w, long long n_max) {
    if (n_max < 1 || n_max % 2 == 0)
        throw std::domain_error("validate_weight: n_max must be an odd positive integer");

    ValidationReport report;
    for (long long n = 1; n <= n_max; n += 2) {
        const double v = weight_eval(w, n);
        if (!(v > 0.0)) report.add("positive", {static_cast<double>(n)}, v, 0.0);
        if (n + 2 <= n_max) {
            const double next = weight_eval(w, n + 2);
            if (v > next + 1e-12)
                report.add("nondecreasing", {static_cast<double>(n), static_cast<double>(n + 2)}, v,
                           next);
            const double ratio = v / static_cast<double>(n);
            const double ratio_next = next / static_cast<double>(n + 2);
            if (ratio_next > ratio + 1e-12)
                report.add("ratio-nonincreasing",
                           {static_cast<double>(n), static_cast<double>(n + 2)}, ratio_next, ratio);
        }
    }
    return report;
}

}  // namespace omseq
