#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mutinfo/binning.hpp"
#include "mutinfo/optbins.hpp"
#include "mutinfo/types.hpp"

namespace mutinfo {

/// Posterior Dirichlet over bin probabilities: alpha_k = n_k + beta.
struct DirichletSpec {
    double beta = 0.5;
    std::vector<double> alphas;

    static DirichletSpec posterior(const BinCounts& bc, double beta);
};

/// Monte Carlo summary of a posterior-sampled scalar.
struct EstimateWithError {
    double mean = 0.0;
    double std_dev = 0.0;
    std::int64_t n_draws = 0;
};

/// n_draws i.i.d. draws from Dirichlet(n_1+beta, ..., n_M+beta), row-major
/// (n_draws x M). Each row sums to 1; deterministic given seed.
std::vector<double> sample_bin_probabilities(const BinCounts& bc, double beta,
                                             std::int64_t n_draws, std::uint64_t seed);

enum class EntropyKind {
    discrete,    // entropy of the bin probability vector
    differential // adds log(V/M), the piece-wise-constant density correction
};

/// Posterior mean and std-dev of the bin entropy -sum pi_k log pi_k across
/// Dirichlet draws.
EstimateWithError posterior_entropy(const BinCounts& bc, double beta, std::int64_t n_draws,
                                    std::uint64_t seed, LogBase b,
                                    EntropyKind kind = EntropyKind::discrete);

/// Bin selection for the Bayesian MI estimator: either explicit (m_x, m_y)
/// or automatic, which maximizes the joint bin-count posterior over square
/// M x M grids (see joint_optimal_bins).
struct BinChoice {
    bool automatic = true;
    std::int64_t m_x = 0;
    std::int64_t m_y = 0;
    std::int64_t max_bins = 0; // 0 -> default_max_bins(N)

    static BinChoice auto_bins(std::int64_t max_bins = 0) {
        return BinChoice{true, 0, 0, max_bins};
    }
    static BinChoice fixed(std::int64_t m_x, std::int64_t m_y) {
        return BinChoice{false, m_x, m_y, 0};
    }
};

/// Resolves a BinChoice to concrete (m_x, m_y); auto mode runs the joint
/// square-grid scan.
std::pair<std::int64_t, std::int64_t> choose_joint_bins(const SeriesPair& s, double beta,
                                                        const BinChoice& bins);

/// Bayesian MI: Dirichlet posterior draws of the joint cell probabilities
/// (exponent beta over m_x * m_y cells); per draw I = H(X) + H(Y) - H(X,Y)
/// with marginals as row/column sums of the drawn joint. Mean clamped at 0
/// from below. Nats.
EstimateWithError mi_bayes(const SeriesPair& s, double beta, const BinChoice& bins,
                           std::int64_t n_draws, std::uint64_t seed);

/// Frequentist plug-in MI on an m x m grid (joint pmf = counts / N).
/// No prior, no error bars. Nats.
double mi_fixed_hist(const SeriesPair& s, std::int64_t m);

} // namespace mutinfo
