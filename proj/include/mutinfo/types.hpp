#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "mutinfo/errors.hpp"

namespace mutinfo {

/// Output units for information quantities. All internal computation is in
/// nats; `two` converts on output (divide by ln 2).
enum class LogBase { natural, two };

/// Multiplier that converts a value in nats to the requested base.
double log_base_factor(LogBase b);

const char* log_base_name(LogBase b);

/// Two aligned real-valued sample vectors whose dependency is measured.
/// Invariants: equal length >= 2, all entries finite.
struct SeriesPair {
    std::vector<double> x;
    std::vector<double> y;

    std::size_t size() const { return x.size(); }
};

/// Throws ContractViolation if the pair breaks its invariants.
void validate_series(const SeriesPair& s);

/// Discrete probability vector: entries >= 0, sum within 1e-9 of 1.
struct Pmf {
    std::vector<double> probs;

    std::size_t size() const { return probs.size(); }
};

void validate_pmf(const Pmf& p);

/// Joint probability table, row-major, rows x cols.
/// Entries >= 0, total sum within 1e-9 of 1.
struct JointPmf {
    std::vector<double> probs; // row-major, rows * cols
    std::size_t rows = 0;
    std::size_t cols = 0;

    double at(std::size_t r, std::size_t c) const { return probs[r * cols + c]; }
    double& at(std::size_t r, std::size_t c) { return probs[r * cols + c]; }

    Pmf row_marginal() const;
    Pmf col_marginal() const;
    JointPmf transpose() const;
};

void validate_joint_pmf(const JointPmf& p);

/// 0 * log 0 := 0 convention used by every entropy sum in the library.
inline double xlogx(double p) {
    return p > 0.0 ? p * std::log(p) : 0.0;
}

} // namespace mutinfo
