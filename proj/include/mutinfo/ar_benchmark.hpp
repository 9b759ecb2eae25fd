#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "mutinfo/adaptive.hpp"
#include "mutinfo/posterior.hpp"
#include "mutinfo/types.hpp"

namespace mutinfo {

/// Linearly coupled bivariate AR(1):
///   y(i+1) = a_y y(i) + n1(i)
///   x(i+1) = a_x x(i) + e y(i) + n2(i),   n1, n2 ~ N(0,1) independent.
struct ARParams {
    double a_y = 0.5;
    double a_x = 0.6;
    double coupling = 0.0; // e
    double noise_std = 1.0;
};

/// Stationary second moments of the equal-time pair (x(i), y(i)).
struct ArMoments {
    double var_x = 0.0;
    double var_y = 0.0;
    double cov = 0.0;

    double rho() const;
};

ArMoments stationary_moments(const ARParams& p);

/// Iterates the recursion from zero initial state, discards burn_in samples,
/// returns n aligned (x, y) pairs. Noise order per step: n1 then n2.
/// Deterministic given seed. |a| >= 1 -> DomainError; n < 2 -> DomainError.
SeriesPair simulate_coupled_ar(const ARParams& p, std::int64_t n, std::int64_t burn_in,
                               std::uint64_t seed);

/// Ground-truth MI of the jointly Gaussian stationary pair:
/// I = -1/2 ln(1 - rho^2) nats, rho from the stationary moments.
double analytic_mi_coupled_ar(const ARParams& p);

/// One estimator entry of a sweep.
struct MethodSpec {
    enum class Kind { bayes, fixed_hist, adaptive, correlation };

    Kind kind = Kind::bayes;
    double beta = 0.5;               // bayes
    std::int64_t fixed_bins = 30;    // fixed_hist
    AdaptiveConfig adaptive_config;  // adaptive

    static MethodSpec bayes_method(double beta) {
        MethodSpec m;
        m.kind = Kind::bayes;
        m.beta = beta;
        return m;
    }
    static MethodSpec fixed_hist_method(std::int64_t m_bins) {
        MethodSpec m;
        m.kind = Kind::fixed_hist;
        m.fixed_bins = m_bins;
        return m;
    }
    static MethodSpec adaptive_method(AdaptiveConfig cfg = {}) {
        MethodSpec m;
        m.kind = Kind::adaptive;
        m.adaptive_config = cfg;
        return m;
    }
    static MethodSpec correlation_method() {
        MethodSpec m;
        m.kind = Kind::correlation;
        return m;
    }

    /// Stable name used in output columns, e.g. "bayes_beta0.05", "fixed_m30".
    std::string name() const;
};

struct SweepConfig {
    std::int64_t n = 10000;
    std::int64_t burn_in = 1000;
    std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    std::int64_t n_draws = 1000;   // posterior draws per bayes cell
    std::int64_t max_bins = 0;     // optBINS prior support; 0 -> default
    ARParams params;               // coupling is overwritten per row
};

/// One coupling value: seed-averaged estimates per method. A method whose
/// cells all failed is absent from `estimates`; `selected_bins` records the
/// auto-chosen (m_x, m_y) of the first bayes method on the first seed.
struct SweepRow {
    double coupling = 0.0;
    double analytic_mi = 0.0;
    std::map<std::string, EstimateWithError> estimates;
    std::optional<std::pair<std::int64_t, std::int64_t>> selected_bins;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::vector<std::string> method_names; // column order
    SweepConfig config;
};

/// Runs every (coupling, seed) cell: simulate, estimate with each method,
/// average across seeds. Per-cell simulation seeds are derive_seed(seed,
/// coupling index); estimator errors mark the cell missing rather than
/// aborting the sweep. Empty couplings -> DomainError.
SweepResult run_sweep(std::span<const double> couplings, const std::vector<MethodSpec>& methods,
                      const SweepConfig& cfg);

/// Wide CSV: coupling, analytic_mi, <method>_mean/<method>_std pairs,
/// selected_m_x, selected_m_y. Missing cells are empty fields.
std::string sweep_to_csv(const SweepResult& r);

/// Long plot-ready CSV: coupling, method, value (seed-averaged mean; the
/// analytic curve appears as method "analytic").
std::string sweep_to_long_csv(const SweepResult& r);

nlohmann::ordered_json sweep_to_json(const SweepResult& r);

} // namespace mutinfo
