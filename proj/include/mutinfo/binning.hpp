#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mutinfo/types.hpp"

namespace mutinfo {

struct Range {
    double lo = 0.0;
    double hi = 0.0;
};

/// [min(data), max(data)]. Throws EmptyInputError on empty data and
/// DegenerateRangeError when all values coincide.
Range auto_range(std::span<const double> data);

/// Equal-width histogram counts. Bins are half-open [e_k, e_{k+1}) except
/// the last, which is closed at hi so the range endpoint is counted.
/// For joint (dims == 2) counts, cells are row-major with the x axis as the
/// row index: cell = ix * m_y + iy, m = m_x * m_y, and range_volume is the
/// rectangle area.
struct BinCounts {
    std::vector<std::int64_t> counts;
    std::int64_t m = 0;        // bins (total cells when dims == 2)
    std::int64_t n_total = 0;  // N = sum of counts
    double range_volume = 0.0; // V, product of axis ranges
    int dims = 1;
    std::int64_t m_x = 0; // axis geometry; m_x == m, m_y == 1 when dims == 1
    std::int64_t m_y = 1;
};

BinCounts histogram_counts(std::span<const double> data, std::int64_t m, Range range);

BinCounts joint_histogram_counts(const SeriesPair& s, std::int64_t m_x, std::int64_t m_y,
                                 Range range_x, Range range_y);

/// counts / N as a joint pmf (rows = x bins). Requires dims == 2.
JointPmf joint_pmf_from_counts(const BinCounts& bc);

/// True when joint counts b is the transpose of a.
bool is_transpose_of(const BinCounts& a, const BinCounts& b);

} // namespace mutinfo
