#include "mutinfo/types.hpp"

#include <algorithm>
#include <cmath>

namespace mutinfo {

double log_base_factor(LogBase b) {
    return b == LogBase::natural ? 1.0 : 1.0 / std::log(2.0);
}

const char* log_base_name(LogBase b) {
    return b == LogBase::natural ? "nats" : "bits";
}

void validate_series(const SeriesPair& s) {
    if (s.x.size() != s.y.size())
        throw ContractViolation("series lengths differ: " + std::to_string(s.x.size()) + " vs " +
                                std::to_string(s.y.size()));
    if (s.x.size() < 2) throw ContractViolation("series needs at least 2 samples");
    for (double v : s.x)
        if (!std::isfinite(v)) throw ContractViolation("non-finite value in x series");
    for (double v : s.y)
        if (!std::isfinite(v)) throw ContractViolation("non-finite value in y series");
}

namespace {
constexpr double kSumTolerance = 1e-9;

void check_probs(const std::vector<double>& probs, const char* what) {
    if (probs.empty()) throw ContractViolation(std::string(what) + " is empty");
    double sum = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0)) // also rejects NaN
            throw ContractViolation(std::string(what) + " has a negative or non-finite entry");
        sum += p;
    }
    if (std::abs(sum - 1.0) > kSumTolerance)
        throw ContractViolation(std::string(what) + " does not sum to 1 (sum = " +
                                std::to_string(sum) + ")");
}
} // namespace

void validate_pmf(const Pmf& p) {
    check_probs(p.probs, "pmf");
}

void validate_joint_pmf(const JointPmf& p) {
    if (p.rows < 1 || p.cols < 1 || p.probs.size() != p.rows * p.cols)
        throw ContractViolation("joint pmf shape mismatch");
    check_probs(p.probs, "joint pmf");
}

namespace {
// Marginal bins accumulate their addends in sorted order, so the sums
// depend only on the multiset of cell values. Transposed or axis-mirrored
// tables then produce bit-identical marginals.
double canonical_sum(std::vector<double>& terms) {
    std::sort(terms.begin(), terms.end());
    double sum = 0.0;
    for (double t : terms) sum += t;
    return sum;
}
} // namespace

Pmf JointPmf::row_marginal() const {
    Pmf m;
    m.probs.resize(rows);
    std::vector<double> terms(cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) terms[c] = at(r, c);
        m.probs[r] = canonical_sum(terms);
    }
    return m;
}

Pmf JointPmf::col_marginal() const {
    Pmf m;
    m.probs.resize(cols);
    std::vector<double> terms(rows);
    for (std::size_t c = 0; c < cols; ++c) {
        for (std::size_t r = 0; r < rows; ++r) terms[r] = at(r, c);
        m.probs[c] = canonical_sum(terms);
    }
    return m;
}

JointPmf JointPmf::transpose() const {
    JointPmf t;
    t.rows = cols;
    t.cols = rows;
    t.probs.assign(probs.size(), 0.0);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
}

} // namespace mutinfo
