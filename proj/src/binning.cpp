#include "mutinfo/binning.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mutinfo {

Range auto_range(std::span<const double> data) {
    if (data.empty()) throw EmptyInputError("cannot compute a range over no data");
    double lo = data[0], hi = data[0];
    for (double v : data) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (!(lo < hi))
        throw DegenerateRangeError("data range is a single point (" + std::to_string(lo) + ")");
    return {lo, hi};
}

namespace {

// Bin index under the half-open convention, last bin closed at hi.
// Relative position keeps the mapping invariant under exact affine maps.
std::int64_t bin_index(double v, Range r, std::int64_t m, const char* axis) {
    if (!(v >= r.lo && v <= r.hi))
        throw OutOfRangeError(std::string("datum ") + std::to_string(v) + " outside " + axis +
                              " range [" + std::to_string(r.lo) + ", " + std::to_string(r.hi) + "]");
    const double pos = (v - r.lo) / (r.hi - r.lo);
    auto k = static_cast<std::int64_t>(pos * static_cast<double>(m));
    return std::min(k, m - 1);
}

void check_bins(std::int64_t m, const char* axis) {
    if (m < 1) throw DomainError(std::string(axis) + " bin count must be >= 1");
}

void check_range(Range r) {
    if (!(r.lo < r.hi)) throw DegenerateRangeError("range lo must be strictly below hi");
}

} // namespace

BinCounts histogram_counts(std::span<const double> data, std::int64_t m, Range range) {
    check_bins(m, "x");
    check_range(range);
    if (data.empty()) throw EmptyInputError("histogram over no data");

    BinCounts bc;
    bc.counts.assign(static_cast<std::size_t>(m), 0);
    for (double v : data) ++bc.counts[static_cast<std::size_t>(bin_index(v, range, m, "x"))];
    bc.m = m;
    bc.n_total = static_cast<std::int64_t>(data.size());
    bc.range_volume = range.hi - range.lo;
    bc.dims = 1;
    bc.m_x = m;
    bc.m_y = 1;
    return bc;
}

BinCounts joint_histogram_counts(const SeriesPair& s, std::int64_t m_x, std::int64_t m_y,
                                 Range range_x, Range range_y) {
    check_bins(m_x, "x");
    check_bins(m_y, "y");
    check_range(range_x);
    check_range(range_y);
    if (s.x.empty()) throw EmptyInputError("joint histogram over no data");
    validate_series(s);

    BinCounts bc;
    bc.counts.assign(static_cast<std::size_t>(m_x * m_y), 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        const std::int64_t ix = bin_index(s.x[i], range_x, m_x, "x");
        const std::int64_t iy = bin_index(s.y[i], range_y, m_y, "y");
        ++bc.counts[static_cast<std::size_t>(ix * m_y + iy)];
    }
    bc.m = m_x * m_y;
    bc.n_total = static_cast<std::int64_t>(s.size());
    bc.range_volume = (range_x.hi - range_x.lo) * (range_y.hi - range_y.lo);
    bc.dims = 2;
    bc.m_x = m_x;
    bc.m_y = m_y;
    return bc;
}

JointPmf joint_pmf_from_counts(const BinCounts& bc) {
    if (bc.dims != 2) throw ContractViolation("joint pmf requires 2-d counts");
    JointPmf p;
    p.rows = static_cast<std::size_t>(bc.m_x);
    p.cols = static_cast<std::size_t>(bc.m_y);
    p.probs.resize(bc.counts.size());
    const double n = static_cast<double>(bc.n_total);
    for (std::size_t i = 0; i < bc.counts.size(); ++i)
        p.probs[i] = static_cast<double>(bc.counts[i]) / n;
    return p;
}

bool is_transpose_of(const BinCounts& a, const BinCounts& b) {
    if (a.dims != 2 || b.dims != 2) return false;
    if (a.m_x != b.m_y || a.m_y != b.m_x || a.n_total != b.n_total) return false;
    for (std::int64_t r = 0; r < a.m_x; ++r)
        for (std::int64_t c = 0; c < a.m_y; ++c)
            if (a.counts[static_cast<std::size_t>(r * a.m_y + c)] !=
                b.counts[static_cast<std::size_t>(c * b.m_y + r)])
                return false;
    return true;
}

} // namespace mutinfo
