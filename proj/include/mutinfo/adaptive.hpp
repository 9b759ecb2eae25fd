#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

#include "mutinfo/types.hpp"

namespace mutinfo {

/// Normalized ranks rank(i)/N in (0, 1]; ranks are 1-based positions in the
/// sorted order, ties broken stably by original index.
std::vector<double> rank_transform(std::span<const double> data);

/// Rank-space coordinates of a series pair; both marginals uniform on (0,1].
struct RankedPair {
    std::vector<double> u;
    std::vector<double> v;
};

RankedPair ranked_pair(const SeriesPair& s);

struct AdaptiveConfig {
    double chi2_threshold = 7.815; // 95th percentile of chi-square, 3 dof
    std::int64_t min_cell_count = 8;
    int max_depth = 20;
};

/// A cell of the adaptive partition. Cells are half-open (lo, hi] on both
/// axes, matching the rank range (0, 1]; leaves tile the unit square.
/// Children, when present, are the 4 midpoint quadrants in the order
/// (lo,lo), (hi,lo), (lo,hi), (hi,hi).
struct PartitionNode {
    double u_lo = 0.0, u_hi = 1.0;
    double v_lo = 0.0, v_hi = 1.0;
    std::int64_t count = 0;
    std::vector<PartitionNode> children;

    bool is_leaf() const { return children.empty(); }
};

/// Recursive chi-square partition: a cell splits at its coordinate midpoints
/// when the Pearson statistic over the 4 quadrants exceeds cfg.chi2_threshold
/// and the cell is feasible to split (count >= min_cell_count, depth below
/// max_depth). Deterministic; the statistic is accumulated in integer
/// arithmetic so it is invariant under quadrant reordering.
///
/// Known limit of the greedy single test: a dependency that balances all
/// four quadrant counts of a cell (e.g. an exactly even function of a
/// symmetric variable, whose rank scatter is V-shaped) looks locally
/// uniform, so the cell stays whole and the structure below it is never
/// examined. Detecting it needs a deeper or multi-resolution test.
PartitionNode build_partition(const RankedPair& r, const AdaptiveConfig& cfg);

/// Plug-in MI over the leaves: sum (n_c/N) log[(n_c/N) / (p_u(c) p_v(c))]
/// where the marginal cell masses are the side lengths (exact under the rank
/// transform). Unclamped; summed in a canonical order so the value is
/// invariant under axis swap. Nats.
double adaptive_mi_sum(const PartitionNode& root, std::int64_t n);

/// Adaptive variable bin-width MI estimate: rank transform, partition,
/// leaf sum, clamp at 0 from below. Invariant under strictly monotone
/// transforms of either series. All-tied input -> DegenerateSeriesError.
double mi_adaptive(const SeriesPair& s, const AdaptiveConfig& cfg, LogBase b);

/// Tree serialization for inspection: {"u":[lo,hi],"v":[lo,hi],"count":n,
/// "children":[...]}.
nlohmann::ordered_json partition_to_json(const PartitionNode& node);

} // namespace mutinfo
