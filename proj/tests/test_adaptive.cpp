#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mutinfo/adaptive.hpp"
#include "mutinfo/ar_benchmark.hpp"
#include "mutinfo/rng.hpp"
#include "support/fixtures.hpp"

using namespace mutinfo;

namespace {

// Walks the tree for one point, asserting it lies in exactly one child at
// every level; returns the leaf it lands in.
const PartitionNode* locate(const PartitionNode& node, double u, double v) {
    REQUIRE(u > node.u_lo);
    REQUIRE(u <= node.u_hi);
    REQUIRE(v > node.v_lo);
    REQUIRE(v <= node.v_hi);
    if (node.is_leaf()) return &node;
    const PartitionNode* found = nullptr;
    int containing = 0;
    for (const PartitionNode& c : node.children)
        if (u > c.u_lo && u <= c.u_hi && v > c.v_lo && v <= c.v_hi) {
            ++containing;
            found = &c;
        }
    REQUIRE(containing == 1);
    return locate(*found, u, v);
}

std::int64_t leaf_count_sum(const PartitionNode& node) {
    if (node.is_leaf()) return node.count;
    std::int64_t total = 0;
    for (const PartitionNode& c : node.children) total += leaf_count_sum(c);
    return total;
}

void check_child_counts(const PartitionNode& node) {
    if (node.is_leaf()) return;
    REQUIRE(node.children.size() == 4);
    std::int64_t sum = 0;
    for (const PartitionNode& c : node.children) {
        sum += c.count;
        check_child_counts(c);
    }
    CHECK(sum == node.count);
}

} // namespace

TEST_CASE("rank_transform") {
    const std::vector<double> data = {3.0, 1.0, 2.0};
    const std::vector<double> expected = {1.0, 1.0 / 3.0, 2.0 / 3.0};
    CHECK(rank_transform(data) == expected);

    SUBCASE("invariant under strictly monotone transforms") {
        Rng rng(12);
        std::vector<double> raw(257);
        for (double& v : raw) v = rng.normal();
        std::vector<double> cubed(raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i) cubed[i] = raw[i] * raw[i] * raw[i];
        CHECK(rank_transform(raw) == rank_transform(cubed));
    }
    SUBCASE("stable tie-break by original index") {
        CHECK(rank_transform(std::vector<double>{5.0, 5.0}) == std::vector<double>{0.5, 1.0});
        CHECK(rank_transform(std::vector<double>{2.0, 2.0, 1.0}) ==
              std::vector<double>{2.0 / 3.0, 1.0, 1.0 / 3.0});
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(rank_transform(std::vector<double>{}), DomainError);
        CHECK_THROWS_AS(rank_transform(std::vector<double>{1.0}), DomainError);
    }
}

TEST_CASE("build_partition split gating") {
    SUBCASE("min_cell_count keeps a tiny sample whole") {
        const RankedPair r{{0.25, 0.5, 0.75, 1.0}, {0.25, 0.5, 0.75, 1.0}};
        AdaptiveConfig cfg;
        cfg.min_cell_count = 8;
        const PartitionNode root = build_partition(r, cfg);
        CHECK(root.is_leaf());
        CHECK(root.count == 4);
    }
    SUBCASE("diagonal data splits: quadrant counts are [n/2,0,0,n/2]") {
        std::vector<double> x(64);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = static_cast<double>(i);
        const SeriesPair s{x, x};
        const RankedPair r = ranked_pair(s);
        const PartitionNode root = build_partition(r, {});
        REQUIRE_FALSE(root.is_leaf());
        CHECK(root.children[0].count == 32);
        CHECK(root.children[1].count == 0);
        CHECK(root.children[2].count == 0);
        CHECK(root.children[3].count == 32);
        check_child_counts(root);
    }
    SUBCASE("independent uniform ranks usually leave the root whole") {
        int single_leaf = 0;
        const int seeds = 50;
        for (int seed = 0; seed < seeds; ++seed) {
            SeriesPair s;
            Rng rng(derive_seed(991, seed));
            for (int i = 0; i < 2000; ++i) {
                s.x.push_back(rng.uniform());
                s.y.push_back(rng.uniform());
            }
            if (build_partition(ranked_pair(s), {}).is_leaf()) ++single_leaf;
        }
        // fixed marginals make the root statistic ~chi2_1, so well above 80%
        CHECK(single_leaf >= 40);
    }
    SUBCASE("max_depth caps recursion") {
        std::vector<double> x(4096);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = static_cast<double>(i);
        AdaptiveConfig cfg;
        cfg.max_depth = 2;
        const PartitionNode root = build_partition(ranked_pair({x, x}), cfg);
        int depth = 0;
        const PartitionNode* n = &root;
        while (!n->is_leaf()) {
            ++depth;
            n = &n->children[0];
        }
        CHECK(depth <= 2);
    }
    SUBCASE("config validation") {
        const RankedPair r{{0.5, 1.0}, {0.5, 1.0}};
        AdaptiveConfig bad;
        bad.chi2_threshold = 0.0;
        CHECK_THROWS_AS(build_partition(r, bad), DomainError);
        bad = {};
        bad.min_cell_count = 0;
        CHECK_THROWS_AS(build_partition(r, bad), DomainError);
        bad = {};
        bad.max_depth = 0;
        CHECK_THROWS_AS(build_partition(r, bad), DomainError);
    }
}

TEST_CASE("partition leaves tile the unit square") {
    Rng rng(314);
    SeriesPair s;
    for (int i = 0; i < 512; ++i) {
        const double x = rng.normal();
        s.x.push_back(x);
        s.y.push_back(x * x + 0.3 * rng.normal());
    }
    const RankedPair r = ranked_pair(s);
    const PartitionNode root = build_partition(r, {});
    check_child_counts(root);
    CHECK(leaf_count_sum(root) == 512);

    for (std::size_t i = 0; i < r.u.size(); ++i) locate(root, r.u[i], r.v[i]);
}

TEST_CASE("mi_adaptive") {
    SUBCASE("independent uniform averages near zero over 10 seeds") {
        double total = 0.0;
        for (int seed = 1; seed <= 10; ++seed) {
            SeriesPair s;
            Rng rng(derive_seed(5005, seed));
            for (int i = 0; i < 10000; ++i) {
                s.x.push_back(rng.uniform());
                s.y.push_back(rng.uniform());
            }
            total += mi_adaptive(s, {}, LogBase::natural);
        }
        CHECK(total / 10.0 <= 0.02);
    }
    SUBCASE("tracks the analytic value on the coupled AR system at e=1") {
        ARParams p;
        p.coupling = 1.0;
        const double analytic = analytic_mi_coupled_ar(p);
        double total = 0.0;
        const int seeds = 4;
        for (int seed = 1; seed <= seeds; ++seed)
            total += mi_adaptive(simulate_coupled_ar(p, 10000, 1000, derive_seed(4242, seed)), {},
                                 LogBase::natural);
        CHECK(std::abs(total / seeds - analytic) < 0.02);
    }
    SUBCASE("resolution grows with N on a singular dependency") {
        const auto diag_mi = [](std::size_t n) {
            std::vector<double> x = fixtures::gaussian_sample(88, n);
            return mi_adaptive({x, x}, {}, LogBase::natural);
        };
        CHECK(diag_mi(10000) > diag_mi(100));
    }
    SUBCASE("all-ties input is a degenerate series") {
        CHECK_THROWS_AS(mi_adaptive({{1.0, 1.0, 1.0}, {1.0, 2.0, 3.0}}, {}, LogBase::natural),
                        DegenerateSeriesError);
        CHECK_THROWS_AS(mi_adaptive({{1.0, 2.0, 3.0}, {7.0, 7.0, 7.0}}, {}, LogBase::natural),
                        DegenerateSeriesError);
    }
    SUBCASE("exact monotone invariance and swap symmetry") {
        Rng rng(606);
        SeriesPair s;
        for (int i = 0; i < 3000; ++i) {
            const double x = rng.normal();
            s.x.push_back(x);
            s.y.push_back(std::sin(x) + 0.2 * rng.normal());
        }
        const double base = mi_adaptive(s, {}, LogBase::natural);

        SeriesPair warped;
        for (double v : s.x) warped.x.push_back(v * v * v + 2.0 * v); // strictly increasing
        for (double v : s.y) warped.y.push_back(std::exp(v));
        CHECK(mi_adaptive(warped, {}, LogBase::natural) == base);

        CHECK(mi_adaptive({s.y, s.x}, {}, LogBase::natural) == base);
    }
    SUBCASE("deterministic trees and nonnegative clamping") {
        Rng rng(9090);
        for (int rep = 0; rep < 20; ++rep) {
            SeriesPair s;
            const std::size_t n = 64 + rng.next_u64() % 1000;
            for (std::size_t i = 0; i < n; ++i) {
                s.x.push_back(rng.normal());
                s.y.push_back(rng.normal() + 0.2 * s.x.back());
            }
            const RankedPair r = ranked_pair(s);
            const PartitionNode a = build_partition(r, {});
            const PartitionNode b = build_partition(r, {});
            CHECK(partition_to_json(a) == partition_to_json(b));

            const double raw = adaptive_mi_sum(a, static_cast<std::int64_t>(n));
            CHECK(raw > -1e-9);
            const double clamped = mi_adaptive(s, {}, LogBase::natural);
            CHECK(clamped == (raw < 0.0 ? 0.0 : raw));
            CHECK(clamped >= 0.0);
        }
    }
    SUBCASE("log base conversion") {
        Rng rng(11);
        SeriesPair s;
        for (int i = 0; i < 2000; ++i) {
            const double x = rng.normal();
            s.x.push_back(x);
            s.y.push_back(x + 0.1 * rng.normal());
        }
        const double nats = mi_adaptive(s, {}, LogBase::natural);
        const double bits = mi_adaptive(s, {}, LogBase::two);
        CHECK(bits == doctest::Approx(nats / std::log(2.0)).epsilon(1e-12));
    }
}

TEST_CASE("partition JSON shape") {
    std::vector<double> x(64);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = static_cast<double>(i);
    const PartitionNode root = build_partition(ranked_pair({x, x}), {});
    const nlohmann::ordered_json j = partition_to_json(root);
    CHECK(j["count"] == 64);
    CHECK(j["u"][0] == 0.0);
    CHECK(j["u"][1] == 1.0);
    REQUIRE(j["children"].size() == 4);
    CHECK(j["children"][0]["count"] == 32);
    CHECK(j["children"][0]["u"][1] == 0.5);
}
