#include "mutinfo/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "mutinfo/estimators.hpp"
#include "mutinfo/format.hpp"
#include "mutinfo/rng.hpp"

namespace mutinfo {

const std::vector<std::string>& DependencyReport::methods() {
    static const std::vector<std::string> kMethods = {"mi_bayes", "mi_adaptive", "corr"};
    return kMethods;
}

namespace {

bool is_constant(const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
}

// Rank 1 = strongest. Degenerate variables go last; ties (including among
// degenerates) break alphabetically by variable name.
void assign_ranks(std::vector<VariableScore>& rows, const std::string& method,
                  double (*score)(const VariableScore&)) {
    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const VariableScore& ra = rows[a];
        const VariableScore& rb = rows[b];
        if (ra.degenerate != rb.degenerate) return rb.degenerate;
        if (!ra.degenerate) {
            const double sa = score(ra), sb = score(rb);
            if (sa != sb) return sa > sb;
        }
        return ra.variable < rb.variable;
    });
    for (std::size_t pos = 0; pos < order.size(); ++pos)
        rows[order[pos]].rank_by[method] = static_cast<int>(pos) + 1;
}

} // namespace

DependencyReport rank_dependencies(const DataTable& t, const std::string& target,
                                   const RankingConfig& cfg, std::uint64_t seed) {
    if (!t.has_column(target)) throw LoadError("target column '" + target + "' not found");
    const std::vector<double>& target_col = t.column(target);
    if (target_col.size() < 2) throw ContractViolation("table needs at least 2 rows");
    if (is_constant(target_col))
        throw DegenerateSeriesError("target column '" + target + "' is constant");

    DependencyReport report;
    report.target = target;
    report.config = cfg;
    report.seed = seed;

    for (std::size_t ci = 0; ci < t.column_names.size(); ++ci) {
        const std::string& name = t.column_names[ci];
        if (name == target) continue;

        VariableScore row;
        row.variable = name;
        const SeriesPair pair{t.columns[ci], target_col};

        if (is_constant(t.columns[ci])) {
            row.degenerate = true;
            row.mi_bayes = {std::nan(""), std::nan(""), 0};
            row.mi_adaptive = std::nan("");
            row.corr = std::nan("");
            row.abs_corr = std::nan("");
            row.normalized_mi_bayes = std::nan("");
        } else {
            const std::uint64_t var_seed = derive_seed(seed, fnv1a64(name));
            const auto [bx, by] =
                choose_joint_bins(pair, cfg.beta, BinChoice::auto_bins(cfg.max_bins));
            row.bins_x = bx;
            row.bins_y = by;
            row.mi_bayes =
                mi_bayes(pair, cfg.beta, BinChoice::fixed(bx, by), cfg.n_draws, var_seed);
            row.mi_adaptive = mi_adaptive(pair, cfg.adaptive, LogBase::natural);
            row.corr = correlation(pair);
            row.abs_corr = std::abs(row.corr);
            row.normalized_mi_bayes = normalized_mi(row.mi_bayes.mean);
        }
        report.rows.push_back(std::move(row));
    }
    if (report.rows.empty()) throw LoadError("no candidate columns besides the target");

    assign_ranks(report.rows, "mi_bayes",
                 [](const VariableScore& r) { return r.mi_bayes.mean; });
    assign_ranks(report.rows, "mi_adaptive",
                 [](const VariableScore& r) { return r.mi_adaptive; });
    assign_ranks(report.rows, "corr", [](const VariableScore& r) { return r.abs_corr; });

    std::sort(report.rows.begin(), report.rows.end(),
              [](const VariableScore& a, const VariableScore& b) {
                  return a.rank_by.at("mi_bayes") < b.rank_by.at("mi_bayes");
              });
    return report;
}

namespace {
std::string cell(double v) {
    return std::isnan(v) ? std::string("nan") : format_double(v);
}
} // namespace

std::string report_to_text(const DependencyReport& r) {
    std::vector<std::vector<std::string>> grid;
    grid.push_back({"variable", "mi_bayes", "+-", "mi_adaptive", "corr", "norm_mi", "rank_bayes",
                    "rank_adaptive", "rank_corr", "flags"});
    for (const VariableScore& row : r.rows) {
        grid.push_back({row.variable, cell(row.mi_bayes.mean), cell(row.mi_bayes.std_dev),
                        cell(row.mi_adaptive), cell(row.corr), cell(row.normalized_mi_bayes),
                        std::to_string(row.rank_by.at("mi_bayes")),
                        std::to_string(row.rank_by.at("mi_adaptive")),
                        std::to_string(row.rank_by.at("corr")),
                        row.degenerate ? "degenerate" : ""});
    }
    std::vector<std::size_t> width(grid[0].size(), 0);
    for (const auto& line : grid)
        for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());

    std::string out = "target: " + r.target + "\n";
    for (const auto& line : grid) {
        std::string text;
        for (std::size_t c = 0; c < line.size(); ++c) {
            text += line[c];
            if (c + 1 < line.size())
                text.append(width[c] + 2 - line[c].size(), ' ');
        }
        while (!text.empty() && text.back() == ' ') text.pop_back();
        out += text + "\n";
    }
    return out;
}

std::string report_to_csv(const DependencyReport& r) {
    std::ostringstream os;
    os << "variable,mi_bayes_mean,mi_bayes_std,mi_adaptive,corr,abs_corr,normalized_mi_bayes,"
          "bins_x,bins_y,rank_mi_bayes,rank_mi_adaptive,rank_corr,degenerate\n";
    for (const VariableScore& row : r.rows) {
        os << row.variable << "," << cell(row.mi_bayes.mean) << "," << cell(row.mi_bayes.std_dev)
           << "," << cell(row.mi_adaptive) << "," << cell(row.corr) << "," << cell(row.abs_corr)
           << "," << cell(row.normalized_mi_bayes) << "," << row.bins_x << "," << row.bins_y << ","
           << row.rank_by.at("mi_bayes") << "," << row.rank_by.at("mi_adaptive") << ","
           << row.rank_by.at("corr") << "," << (row.degenerate ? 1 : 0) << "\n";
    }
    return os.str();
}

nlohmann::ordered_json report_to_json(const DependencyReport& r) {
    nlohmann::ordered_json j;
    j["target"] = r.target;
    j["params"] = {{"beta", r.config.beta},
                   {"n_draws", r.config.n_draws},
                   {"max_bins", r.config.max_bins},
                   {"chi2_threshold", r.config.adaptive.chi2_threshold},
                   {"min_cell_count", r.config.adaptive.min_cell_count},
                   {"max_depth", r.config.adaptive.max_depth},
                   {"seed", r.seed}};
    j["variables"] = nlohmann::ordered_json::array();
    for (const VariableScore& row : r.rows) {
        nlohmann::ordered_json jr;
        jr["variable"] = row.variable;
        jr["mi_bayes"] = {{"mean", row.mi_bayes.mean},
                          {"std", row.mi_bayes.std_dev},
                          {"n_draws", row.mi_bayes.n_draws}};
        jr["mi_adaptive"] = row.mi_adaptive;
        jr["corr"] = row.corr;
        jr["abs_corr"] = row.abs_corr;
        jr["normalized_mi_bayes"] = row.normalized_mi_bayes;
        jr["bins"] = {row.bins_x, row.bins_y};
        jr["degenerate"] = row.degenerate;
        jr["rank_by"] = {{"mi_bayes", row.rank_by.at("mi_bayes")},
                         {"mi_adaptive", row.rank_by.at("mi_adaptive")},
                         {"corr", row.rank_by.at("corr")}};
        j["variables"].push_back(std::move(jr));
    }
    return j;
}

} // namespace mutinfo
