#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mutinfo/binning.hpp"

namespace mutinfo {

/// Parameters of the generalized optBINS scan: Dirichlet exponent beta > 0
/// and the upper support C of the uniform prior on the number of bins.
struct OptBinsConfig {
    double beta = 0.5;
    std::int64_t max_bins = 0; // C; must be >= 1 when used
};

/// Default prior support: min(floor(N/2), 200). More bins than N/2 buys
/// nothing but empty bins.
std::int64_t default_max_bins(std::int64_t n);

/// Unnormalized log posterior of the number of bins,
///   N log M + lgamma(M beta) - M lgamma(beta) - lgamma(N + M beta)
///   + sum_k lgamma(n_k + beta),
/// with the additive constant set to 0 (irrelevant for the argmax over M).
/// Exactly 0 at M = 1. Computed entirely with log-gamma so it stays finite
/// for N up to 1e6 and M up to 1e3. beta <= 0 -> DomainError.
double log_posterior_m(const BinCounts& bc, double beta);

/// log_posterior_m over M = 1..max_bins with auto-range bins.
std::vector<double> log_posterior_curve(std::span<const double> data, const OptBinsConfig& cfg);

/// Exhaustive argmax of log_posterior_m over M = 1..max_bins; ties broken
/// toward the smaller M. Constant data -> DegenerateRangeError.
std::int64_t optimal_bins(std::span<const double> data, const OptBinsConfig& cfg);

/// Square-grid bin selection for a joint histogram: argmax over M of the
/// same log posterior evaluated on the M x M joint counts (the multinomial
/// runs over the M^2 cells). Per-axis selection overfits the joint model:
/// the cell count it implies grows quadratically while the posterior only
/// priced the marginal fit. Ties toward smaller M.
std::int64_t joint_optimal_bins(const SeriesPair& s, const OptBinsConfig& cfg);

} // namespace mutinfo
