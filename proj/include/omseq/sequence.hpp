#pragma once

/**
 * @file sequence.hpp
 * @brief Finitely supported two-sided real sequences and index windows.
 */

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace omseq {

/// A two-sided real sequence (x_k), k in Z, stored as a contiguous block
/// starting at `offset`; every index outside the block is exactly 0.
struct FiniteSequence {
    long long offset = 0;
    std::vector<double> values;

    double at(long long k) const {
        if (k < offset) return 0.0;
        const long long i = k - offset;
        if (i >= static_cast<long long>(values.size())) return 0.0;
        return values[static_cast<std::size_t>(i)];
    }

    bool is_zero() const {
        for (double v : values)
            if (v != 0.0) return false;
        return true;
    }

    /// Index range [first, last] of the nonzero entries, or nullopt for the
    /// zero sequence. Stored leading/trailing zeros are not part of it.
    std::optional<std::pair<long long, long long>> support() const {
        long long lo = 0, hi = -1;
        bool found = false;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (values[i] != 0.0) {
                const long long k = offset + static_cast<long long>(i);
                if (!found) lo = k;
                hi = k;
                found = true;
            }
        }
        if (!found) return std::nullopt;
        return std::make_pair(lo, hi);
    }
};

/// The index window {center-half_width, ..., center+half_width},
/// of cardinality 2*half_width + 1.
struct Window {
    long long center = 0;
    long long half_width = 0;

    long long lo() const { return center - half_width; }
    long long hi() const { return center + half_width; }
    long long cardinality() const { return 2 * half_width + 1; }
};

/// The window's content (x_{m-N}, ..., x_{m+N}), zero-padded outside support.
inline std::vector<double> window_slice(const FiniteSequence& x, const Window& w) {
    if (w.half_width < 0) throw std::domain_error("window_slice: negative half-width");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(w.cardinality()));
    for (long long k = w.lo(); k <= w.hi(); ++k) out.push_back(x.at(k));
    return out;
}

inline FiniteSequence scale(double a, const FiniteSequence& x) {
    if (a == 0.0) return FiniteSequence{};
    FiniteSequence out{x.offset, x.values};
    for (double& v : out.values) v *= a;
    return out;
}

inline FiniteSequence add(const FiniteSequence& x, const FiniteSequence& y) {
    if (x.values.empty()) return y;
    if (y.values.empty()) return x;
    const long long lo = std::min(x.offset, y.offset);
    const long long hi = std::max(x.offset + static_cast<long long>(x.values.size()),
                                  y.offset + static_cast<long long>(y.values.size())) -
                         1;
    FiniteSequence out{lo, std::vector<double>(static_cast<std::size_t>(hi - lo + 1), 0.0)};
    for (long long k = lo; k <= hi; ++k)
        out.values[static_cast<std::size_t>(k - lo)] = x.at(k) + y.at(k);
    return out;
}

/// Entrywise equality; representations may differ by stored zeros.
inline bool entrywise_equal(const FiniteSequence& x, const FiniteSequence& y) {
    const long long lo = std::min(x.offset, y.offset);
    const long long hi = std::max(x.offset + static_cast<long long>(x.values.size()),
                                  y.offset + static_cast<long long>(y.values.size()));
    for (long long k = lo; k < hi; ++k)
        if (x.at(k) != y.at(k)) return false;
    return true;
}

/// The geometric example sequence x_k = D^{-(|k|+1)/p}, truncated to
/// |k| <= L. Symmetric about 0 and strictly decreasing in |k|.
inline FiniteSequence geometric_example(double D, double p, long long L) {
    if (!(D > 1.0)) throw std::domain_error("geometric_example: D must exceed 1");
    if (!(p > 0.0)) throw std::domain_error("geometric_example: p must be positive");
    if (L < 0) throw std::domain_error("geometric_example: L must be nonnegative");
    FiniteSequence out{-L, std::vector<double>(static_cast<std::size_t>(2 * L + 1), 0.0)};
    for (long long k = -L; k <= L; ++k) {
        const double e = static_cast<double>(std::llabs(k) + 1) / p;
        out.values[static_cast<std::size_t>(k + L)] = std::pow(D, -e);
    }
    return out;
}

}  // namespace omseq
