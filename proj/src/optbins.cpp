#include "mutinfo/optbins.hpp"

#include <algorithm>
#include <cmath>

namespace mutinfo {

std::int64_t default_max_bins(std::int64_t n) {
    return std::max<std::int64_t>(1, std::min<std::int64_t>(n / 2, 200));
}

double log_posterior_m(const BinCounts& bc, double beta) {
    if (!(beta > 0.0)) throw DomainError("beta must be > 0");
    const double m = static_cast<double>(bc.m);
    const double n = static_cast<double>(bc.n_total);
    double value = n * std::log(m);
    value += std::lgamma(m * beta);
    value -= m * std::lgamma(beta);
    value -= std::lgamma(n + m * beta);
    // Empty bins all contribute lgamma(beta); batching them keeps the joint
    // scan O(N) in log-gamma evaluations.
    const double lgamma_beta = std::lgamma(beta);
    std::int64_t empty = 0;
    for (std::int64_t c : bc.counts) {
        if (c == 0)
            ++empty;
        else
            value += std::lgamma(static_cast<double>(c) + beta);
    }
    value += static_cast<double>(empty) * lgamma_beta;
    return value;
}

std::vector<double> log_posterior_curve(std::span<const double> data, const OptBinsConfig& cfg) {
    if (cfg.max_bins < 1) throw DomainError("max_bins must be >= 1");
    const Range range = auto_range(data);
    std::vector<double> curve;
    curve.reserve(static_cast<std::size_t>(cfg.max_bins));
    for (std::int64_t m = 1; m <= cfg.max_bins; ++m)
        curve.push_back(log_posterior_m(histogram_counts(data, m, range), cfg.beta));
    return curve;
}

std::int64_t optimal_bins(std::span<const double> data, const OptBinsConfig& cfg) {
    const std::vector<double> curve = log_posterior_curve(data, cfg);
    std::size_t best = 0;
    for (std::size_t i = 1; i < curve.size(); ++i)
        if (curve[i] > curve[best]) best = i; // strict: ties keep the smaller M
    return static_cast<std::int64_t>(best) + 1;
}

std::int64_t joint_optimal_bins(const SeriesPair& s, const OptBinsConfig& cfg) {
    if (cfg.max_bins < 1) throw DomainError("max_bins must be >= 1");
    validate_series(s);
    const Range rx = auto_range(s.x);
    const Range ry = auto_range(s.y);
    std::int64_t best_m = 1;
    double best = 0.0;
    for (std::int64_t m = 1; m <= cfg.max_bins; ++m) {
        const double v = log_posterior_m(joint_histogram_counts(s, m, m, rx, ry), cfg.beta);
        if (m == 1 || v > best) {
            best = v;
            best_m = m;
        }
    }
    return best_m;
}

} // namespace mutinfo
