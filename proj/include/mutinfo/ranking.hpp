#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "mutinfo/adaptive.hpp"
#include "mutinfo/posterior.hpp"
#include "mutinfo/table.hpp"

namespace mutinfo {

struct RankingConfig {
    double beta = 0.5;
    std::int64_t n_draws = 1000;
    std::int64_t max_bins = 0; // optBINS prior support; 0 -> default
    AdaptiveConfig adaptive;
};

/// Scores of one candidate variable against the target. Degenerate
/// (constant) candidates are flagged; their scores are NaN and they rank
/// after every scored variable.
struct VariableScore {
    std::string variable;
    EstimateWithError mi_bayes;
    double mi_adaptive = 0.0;
    double corr = 0.0;
    double abs_corr = 0.0;
    double normalized_mi_bayes = 0.0;
    std::int64_t bins_x = 0, bins_y = 0; // auto-selected for the bayes score
    bool degenerate = false;
    std::map<std::string, int> rank_by; // method -> 1-based rank
};

struct DependencyReport {
    std::string target;
    std::vector<VariableScore> rows; // ordered by mi_bayes rank
    RankingConfig config;
    std::uint64_t seed = 0;

    static const std::vector<std::string>& methods(); // {"mi_bayes","mi_adaptive","corr"}
};

/// Scores every non-target column (mi_bayes, mi_adaptive, correlation) and
/// ranks each method's scores descending (correlation by absolute value,
/// rank 1 = strongest). Ties break alphabetically by variable name.
/// Per-variable seeds are derive_seed(seed, fnv1a64(name)), so column order
/// never affects scores. Missing target -> LoadError; constant target ->
/// DegenerateSeriesError.
DependencyReport rank_dependencies(const DataTable& t, const std::string& target,
                                   const RankingConfig& cfg, std::uint64_t seed);

/// Human-readable aligned table.
std::string report_to_text(const DependencyReport& r);

std::string report_to_csv(const DependencyReport& r);

nlohmann::ordered_json report_to_json(const DependencyReport& r);

} // namespace mutinfo
