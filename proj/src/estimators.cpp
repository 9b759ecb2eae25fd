#include "mutinfo/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace mutinfo {

namespace {

// Entropy terms are accumulated in sorted order, so the result depends only
// on the multiset of probabilities. This makes mutual_information_plugin
// bit-identical under transposition.
double entropy_nats(const std::vector<double>& probs) {
    std::vector<double> terms;
    terms.reserve(probs.size());
    for (double p : probs) terms.push_back(xlogx(p));
    std::sort(terms.begin(), terms.end());
    double sum = 0.0;
    for (double t : terms) sum += t;
    return -sum;
}

} // namespace

double shannon_entropy(const Pmf& p, LogBase b) {
    validate_pmf(p);
    return entropy_nats(p.probs) * log_base_factor(b);
}

double joint_entropy(const JointPmf& p, LogBase b) {
    validate_joint_pmf(p);
    return entropy_nats(p.probs) * log_base_factor(b);
}

double mutual_information_plugin(const JointPmf& p, LogBase b) {
    validate_joint_pmf(p);
    const double hx = entropy_nats(p.row_marginal().probs);
    const double hy = entropy_nats(p.col_marginal().probs);
    const double hxy = entropy_nats(p.probs);
    const double mi = ((hx + hy) - hxy) * log_base_factor(b);
    if (mi < -1e-12)
        throw ContractViolation("plug-in MI fell below -1e-12: " + std::to_string(mi));
    return mi < 0.0 ? 0.0 : mi;
}

double normalized_mi(double i_nats) {
    if (!(i_nats >= 0.0)) throw DomainError("normalized_mi requires a nonnegative MI in nats");
    // 1 - exp(-2I) via expm1 for accuracy near 0.
    return std::sqrt(-std::expm1(-2.0 * i_nats));
}

double correlation(const SeriesPair& s) {
    validate_series(s);
    const std::size_t n = s.size();
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_x += s.x[i];
        mean_y += s.y[i];
    }
    mean_x /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);

    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = s.x[i] - mean_x;
        const double dy = s.y[i] - mean_y;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0) throw DegenerateSeriesError("x series has zero variance");
    if (syy == 0.0) throw DegenerateSeriesError("y series has zero variance");

    double r = sxy / std::sqrt(sxx * syy);
    if (r > 1.0) {
        if (r > 1.0 + 1e-12) throw ContractViolation("correlation exceeded 1 beyond tolerance");
        r = 1.0;
    } else if (r < -1.0) {
        if (r < -1.0 - 1e-12) throw ContractViolation("correlation fell below -1 beyond tolerance");
        r = -1.0;
    }
    return r;
}

} // namespace mutinfo
