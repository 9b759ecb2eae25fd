#include "mutinfo/posterior.hpp"

#include <algorithm>
#include <cmath>

#include "mutinfo/estimators.hpp"
#include "mutinfo/rng.hpp"

namespace mutinfo {

DirichletSpec DirichletSpec::posterior(const BinCounts& bc, double beta) {
    if (!(beta > 0.0)) throw DomainError("beta must be > 0");
    DirichletSpec spec;
    spec.beta = beta;
    spec.alphas.reserve(bc.counts.size());
    for (std::int64_t c : bc.counts) spec.alphas.push_back(static_cast<double>(c) + beta);
    return spec;
}

namespace {

void draw_dirichlet(Rng& rng, const std::vector<double>& alphas, std::vector<double>& out) {
    double sum = 0.0;
    for (std::size_t k = 0; k < alphas.size(); ++k) {
        out[k] = rng.gamma(alphas[k]);
        sum += out[k];
    }
    for (double& v : out) v /= sum;
}

EstimateWithError summarize(const std::vector<double>& values) {
    EstimateWithError e;
    e.n_draws = static_cast<std::int64_t>(values.size());
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    e.mean = mean;
    e.std_dev = values.size() > 1 ? std::sqrt(ss / static_cast<double>(values.size() - 1)) : 0.0;
    return e;
}

} // namespace

std::vector<double> sample_bin_probabilities(const BinCounts& bc, double beta,
                                             std::int64_t n_draws, std::uint64_t seed) {
    if (n_draws < 1) throw DomainError("n_draws must be >= 1");
    const DirichletSpec spec = DirichletSpec::posterior(bc, beta);
    const std::size_t m = spec.alphas.size();

    std::vector<double> draws(static_cast<std::size_t>(n_draws) * m);
    std::vector<double> row(m);
    Rng rng(seed);
    for (std::int64_t d = 0; d < n_draws; ++d) {
        draw_dirichlet(rng, spec.alphas, row);
        std::copy(row.begin(), row.end(), draws.begin() + static_cast<std::size_t>(d) * m);
    }
    return draws;
}

EstimateWithError posterior_entropy(const BinCounts& bc, double beta, std::int64_t n_draws,
                                    std::uint64_t seed, LogBase b, EntropyKind kind) {
    if (n_draws < 1) throw DomainError("n_draws must be >= 1");
    const DirichletSpec spec = DirichletSpec::posterior(bc, beta);
    const std::size_t m = spec.alphas.size();
    const double factor = log_base_factor(b);
    const double shift =
        kind == EntropyKind::differential
            ? std::log(bc.range_volume / static_cast<double>(bc.m))
            : 0.0;

    std::vector<double> entropies(static_cast<std::size_t>(n_draws));
    std::vector<double> row(m);
    Rng rng(seed);
    for (auto& h : entropies) {
        draw_dirichlet(rng, spec.alphas, row);
        double sum = 0.0;
        for (double p : row) sum += xlogx(p);
        h = (-sum + shift) * factor;
    }
    return summarize(entropies);
}

std::pair<std::int64_t, std::int64_t> choose_joint_bins(const SeriesPair& s, double beta,
                                                        const BinChoice& bins) {
    if (!bins.automatic) {
        if (bins.m_x < 1 || bins.m_y < 1) throw DomainError("explicit bin counts must be >= 1");
        return {bins.m_x, bins.m_y};
    }
    validate_series(s);
    OptBinsConfig cfg;
    cfg.beta = beta;
    cfg.max_bins = bins.max_bins > 0 ? bins.max_bins
                                     : default_max_bins(static_cast<std::int64_t>(s.size()));
    const std::int64_t m = joint_optimal_bins(s, cfg);
    return {m, m};
}

EstimateWithError mi_bayes(const SeriesPair& s, double beta, const BinChoice& bins,
                           std::int64_t n_draws, std::uint64_t seed) {
    if (n_draws < 1) throw DomainError("n_draws must be >= 1");
    validate_series(s);
    const auto [m_x, m_y] = choose_joint_bins(s, beta, bins);
    const BinCounts joint =
        joint_histogram_counts(s, m_x, m_y, auto_range(s.x), auto_range(s.y));
    const DirichletSpec spec = DirichletSpec::posterior(joint, beta);

    const auto mx = static_cast<std::size_t>(m_x);
    const auto my = static_cast<std::size_t>(m_y);
    std::vector<double> cell(mx * my), px(mx), py(my);
    std::vector<double> mis(static_cast<std::size_t>(n_draws));
    Rng rng(seed);
    for (auto& mi : mis) {
        draw_dirichlet(rng, spec.alphas, cell);
        std::fill(px.begin(), px.end(), 0.0);
        std::fill(py.begin(), py.end(), 0.0);
        double h_joint = 0.0;
        for (std::size_t r = 0; r < mx; ++r)
            for (std::size_t c = 0; c < my; ++c) {
                const double p = cell[r * my + c];
                px[r] += p;
                py[c] += p;
                h_joint -= xlogx(p);
            }
        double h_x = 0.0, h_y = 0.0;
        for (double p : px) h_x -= xlogx(p);
        for (double p : py) h_y -= xlogx(p);
        mi = h_x + h_y - h_joint;
    }
    EstimateWithError e = summarize(mis);
    if (e.mean < 0.0) e.mean = 0.0;
    return e;
}

double mi_fixed_hist(const SeriesPair& s, std::int64_t m) {
    if (m < 1) throw DomainError("bin count must be >= 1");
    validate_series(s);
    const BinCounts joint = joint_histogram_counts(s, m, m, auto_range(s.x), auto_range(s.y));
    return mutual_information_plugin(joint_pmf_from_counts(joint), LogBase::natural);
}

} // namespace mutinfo
