#include "mutinfo/adaptive.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mutinfo {

std::vector<double> rank_transform(std::span<const double> data) {
    const std::size_t n = data.size();
    if (n < 2) throw DomainError("rank transform needs at least 2 samples");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (data[a] != data[b]) return data[a] < data[b];
        return a < b; // stable tie-break by original index
    });

    std::vector<double> ranks(n);
    for (std::size_t pos = 0; pos < n; ++pos)
        ranks[order[pos]] = static_cast<double>(pos + 1) / static_cast<double>(n);
    return ranks;
}

RankedPair ranked_pair(const SeriesPair& s) {
    validate_series(s);
    return RankedPair{rank_transform(s.x), rank_transform(s.y)};
}

namespace {

struct Point {
    double u, v;
};

void validate_config(const AdaptiveConfig& cfg) {
    if (!(cfg.chi2_threshold > 0.0)) throw DomainError("chi2_threshold must be > 0");
    if (cfg.min_cell_count < 1) throw DomainError("min_cell_count must be >= 1");
    if (cfg.max_depth < 1) throw DomainError("max_depth must be >= 1");
}

// Pearson chi-square against uniformity over the 4 quadrants. The numerator
// sum_q (4 n_q - n)^2 = 16 sum_q (n_q - n/4)^2 is integer, so the statistic
// is exact and invariant under quadrant reordering; T = numerator / (4 n).
double chi_square_quadrants(const std::int64_t q[4], std::int64_t n) {
    std::int64_t num = 0;
    for (int i = 0; i < 4; ++i) {
        const std::int64_t d = 4 * q[i] - n;
        num += d * d;
    }
    return static_cast<double>(num) / (4.0 * static_cast<double>(n));
}

// Builds the subtree for pts (all inside the node's cell), reordering the
// slice by quadrant when the cell splits.
void build_node(PartitionNode& node, std::span<Point> pts, int depth, const AdaptiveConfig& cfg) {
    node.count = static_cast<std::int64_t>(pts.size());
    if (node.count < cfg.min_cell_count || depth >= cfg.max_depth) return;

    const double mid_u = 0.5 * (node.u_lo + node.u_hi);
    const double mid_v = 0.5 * (node.v_lo + node.v_hi);

    std::int64_t q[4] = {0, 0, 0, 0};
    for (const Point& p : pts) q[(p.u > mid_u ? 1 : 0) + (p.v > mid_v ? 2 : 0)]++;
    if (chi_square_quadrants(q, node.count) <= cfg.chi2_threshold) return;

    // Quadrant order: (lo,lo), (hi,lo), (lo,hi), (hi,hi).
    auto v_split = std::partition(pts.begin(), pts.end(),
                                  [&](const Point& p) { return p.v <= mid_v; });
    auto u_split_lo = std::partition(pts.begin(), v_split,
                                     [&](const Point& p) { return p.u <= mid_u; });
    auto u_split_hi = std::partition(v_split, pts.end(),
                                     [&](const Point& p) { return p.u <= mid_u; });

    node.children.resize(4);
    node.children[0] = {node.u_lo, mid_u, node.v_lo, mid_v, 0, {}};
    node.children[1] = {mid_u, node.u_hi, node.v_lo, mid_v, 0, {}};
    node.children[2] = {node.u_lo, mid_u, mid_v, node.v_hi, 0, {}};
    node.children[3] = {mid_u, node.u_hi, mid_v, node.v_hi, 0, {}};

    build_node(node.children[0], {pts.begin(), u_split_lo}, depth + 1, cfg);
    build_node(node.children[1], {u_split_lo, v_split}, depth + 1, cfg);
    build_node(node.children[2], {v_split, u_split_hi}, depth + 1, cfg);
    build_node(node.children[3], {u_split_hi, pts.end()}, depth + 1, cfg);
}

void collect_leaf_terms(const PartitionNode& node, double inv_n, std::vector<double>& terms) {
    if (!node.is_leaf()) {
        for (const PartitionNode& c : node.children) collect_leaf_terms(c, inv_n, terms);
        return;
    }
    if (node.count == 0) return;
    const double p = static_cast<double>(node.count) * inv_n;
    const double mass_u = node.u_hi - node.u_lo;
    const double mass_v = node.v_hi - node.v_lo;
    terms.push_back(p * std::log(p / (mass_u * mass_v)));
}

} // namespace

PartitionNode build_partition(const RankedPair& r, const AdaptiveConfig& cfg) {
    validate_config(cfg);
    if (r.u.size() != r.v.size() || r.u.empty())
        throw ContractViolation("ranked pair coordinates must be nonempty and aligned");

    std::vector<Point> pts(r.u.size());
    for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = {r.u[i], r.v[i]};

    PartitionNode root{0.0, 1.0, 0.0, 1.0, 0, {}};
    build_node(root, pts, 0, cfg);
    return root;
}

double adaptive_mi_sum(const PartitionNode& root, std::int64_t n) {
    std::vector<double> terms;
    collect_leaf_terms(root, 1.0 / static_cast<double>(n), terms);
    // Canonical summation order: the value depends only on the multiset of
    // leaf terms, so mirrored trees (axis swap) give bit-identical sums.
    std::sort(terms.begin(), terms.end());
    double sum = 0.0;
    for (double t : terms) sum += t;
    return sum;
}

double mi_adaptive(const SeriesPair& s, const AdaptiveConfig& cfg, LogBase b) {
    validate_series(s);
    const auto all_equal = [](const std::vector<double>& d) {
        return std::all_of(d.begin(), d.end(), [&](double v) { return v == d.front(); });
    };
    if (all_equal(s.x)) throw DegenerateSeriesError("x series is all ties");
    if (all_equal(s.y)) throw DegenerateSeriesError("y series is all ties");

    const RankedPair r = ranked_pair(s);
    const PartitionNode root = build_partition(r, cfg);
    const double mi = adaptive_mi_sum(root, static_cast<std::int64_t>(s.size())) * log_base_factor(b);
    return mi < 0.0 ? 0.0 : mi;
}

nlohmann::ordered_json partition_to_json(const PartitionNode& node) {
    nlohmann::ordered_json j;
    j["u"] = {node.u_lo, node.u_hi};
    j["v"] = {node.v_lo, node.v_hi};
    j["count"] = node.count;
    j["children"] = nlohmann::ordered_json::array();
    for (const PartitionNode& c : node.children) j["children"].push_back(partition_to_json(c));
    return j;
}

} // namespace mutinfo
