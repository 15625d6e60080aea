#pragma once

#include <string>
#include <utility>
#include <vector>

namespace omseq {

/// A single failed property check: which property, at which sample point(s),
/// and the two sides of the inequality that was supposed to hold.
struct Violation {
    std::string property;
    std::vector<double> witness;
    double lhs = 0.0;
    double rhs = 0.0;
};

/// Outcome of a sampled validator. `valid()` is true exactly when no
/// violation was recorded; a failing input yields a report, not an error.
class ValidationReport {
public:
    void add(std::string property, std::vector<double> witness, double lhs, double rhs) {
        violations_.push_back({std::move(property), std::move(witness), lhs, rhs});
    }

    bool valid() const { return violations_.empty(); }
    const std::vector<Violation>& violations() const { return violations_; }

    void merge(const ValidationReport& other) {
        violations_.insert(violations_.end(), other.violations_.begin(),
                           other.violations_.end());
    }

private:
    std::vector<Violation> violations_;
};

}  // namespace omseq
