// mutinfo: dependency estimation between variables via Bayesian binned MI,
// a fixed-bin histogram MI, an adaptive-partition MI, and Pearson
// correlation, plus the coupled-AR benchmark sweep and a CSV ranking
// pipeline. Exit codes: 0 success, 1 data/estimation error, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mutinfo/adaptive.hpp"
#include "mutinfo/ar_benchmark.hpp"
#include "mutinfo/estimators.hpp"
#include "mutinfo/format.hpp"
#include "mutinfo/optbins.hpp"
#include "mutinfo/posterior.hpp"
#include "mutinfo/ranking.hpp"
#include "mutinfo/table.hpp"

using namespace mutinfo;
using nlohmann::ordered_json;

namespace {

struct CommonFlags {
    double beta = 0.5;
    std::int64_t draws = 1000;
    std::int64_t max_bins = 0; // 0 -> min(N/2, 200)
    double chi2_threshold = 7.815;
    std::int64_t min_cell = 8;
    int max_depth = 20;
    std::uint64_t seed = 1;
    std::string base = "nats";
    std::string format = "text";
    std::string output;
};

void add_estimator_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--beta", f.beta, "Dirichlet exponent for the Bayesian model")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--draws", f.draws, "posterior draws per estimate")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--max-bins", f.max_bins,
                    "bin-count prior support C (0 = min(N/2, 200))")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->add_option("--chi2-threshold", f.chi2_threshold,
                    "adaptive split threshold (chi-square, 3 dof)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--min-cell", f.min_cell, "smallest adaptive cell eligible to split")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--max-depth", f.max_depth, "adaptive partition depth cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--seed", f.seed, "master seed; fixed seed means byte-identical output")
        ->capture_default_str();
}

AdaptiveConfig adaptive_config(const CommonFlags& f) {
    AdaptiveConfig cfg;
    cfg.chi2_threshold = f.chi2_threshold;
    cfg.min_cell_count = f.min_cell;
    cfg.max_depth = f.max_depth;
    return cfg;
}

LogBase parse_base(const std::string& s) {
    return s == "bits" ? LogBase::two : LogBase::natural;
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw LoadError("cannot write '" + output_path + "'");
    out << text;
}

std::string dump_json(const ordered_json& j) {
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------- mi ----

struct MiArgs {
    CommonFlags common;
    std::string input;
    std::string x_col, y_col;
    std::string method = "all";
    std::int64_t fixed_bins = 30;
    std::int64_t bins_x = 0, bins_y = 0; // explicit joint bins for bayes
    std::string dump_partition;          // write the adaptive tree here as JSON
};

int run_mi(const MiArgs& a) {
    LoadOptions opt;
    if (!a.x_col.empty() || !a.y_col.empty()) {
        if (a.x_col.empty() || a.y_col.empty())
            throw LoadError("--x and --y must be given together");
        opt.used_columns = std::vector<std::string>{a.x_col, a.y_col};
    }
    const DataTable t = load_table_file(a.input, opt);
    if (t.column_names.size() < 2) throw LoadError("need two columns");
    const SeriesPair s{t.columns[0], t.columns[1]};

    const LogBase base = parse_base(a.common.base);
    const double factor = log_base_factor(base);
    const bool all = a.method == "all";

    struct Row {
        std::string name;
        double value;
        std::optional<double> std_dev;
        std::optional<std::pair<std::int64_t, std::int64_t>> bins;
    };
    std::vector<Row> rows;

    if (all || a.method == "bayes") {
        const BinChoice choice = (a.bins_x > 0 && a.bins_y > 0)
                                     ? BinChoice::fixed(a.bins_x, a.bins_y)
                                     : BinChoice::auto_bins(a.common.max_bins);
        const auto [bx, by] = choose_joint_bins(s, a.common.beta, choice);
        const EstimateWithError e = mi_bayes(s, a.common.beta, BinChoice::fixed(bx, by),
                                             a.common.draws, a.common.seed);
        std::ostringstream name;
        name << "bayes_beta" << a.common.beta;
        rows.push_back({name.str(), e.mean * factor, e.std_dev * factor, {{bx, by}}});
    }
    if (all || a.method == "fixed")
        rows.push_back({"fixed_m" + std::to_string(a.fixed_bins),
                        mi_fixed_hist(s, a.fixed_bins) * factor, {}, {}});
    if (all || a.method == "adaptive") {
        rows.push_back({"adaptive", mi_adaptive(s, adaptive_config(a.common), base), {}, {}});
        if (!a.dump_partition.empty()) {
            const PartitionNode tree =
                build_partition(ranked_pair(s), adaptive_config(a.common));
            emit(dump_json(partition_to_json(tree)), a.dump_partition);
        }
    }
    if (all || a.method == "corr") rows.push_back({"corr", correlation(s), {}, {}});

    if (a.common.format == "json") {
        ordered_json j;
        j["params"] = {{"input", a.input},
                       {"x", t.column_names[0]},
                       {"y", t.column_names[1]},
                       {"method", a.method},
                       {"beta", a.common.beta},
                       {"draws", a.common.draws},
                       {"max_bins", a.common.max_bins},
                       {"fixed_bins", a.fixed_bins},
                       {"chi2_threshold", a.common.chi2_threshold},
                       {"min_cell_count", a.common.min_cell},
                       {"max_depth", a.common.max_depth},
                       {"seed", a.common.seed},
                       {"base", a.common.base},
                       {"rows_used", t.n_rows},
                       {"rows_dropped", t.dropped_rows}};
        j["results"] = ordered_json::array();
        for (const Row& r : rows) {
            ordered_json jr;
            jr["method"] = r.name;
            jr["value"] = r.value;
            if (r.std_dev) jr["std"] = *r.std_dev;
            if (r.bins) jr["bins"] = {r.bins->first, r.bins->second};
            j["results"].push_back(std::move(jr));
        }
        emit(dump_json(j), a.common.output);
    } else if (a.common.format == "csv") {
        std::string out = "method,value,std,bins_x,bins_y\n";
        for (const Row& r : rows) {
            out += r.name + "," + format_double(r.value) + ",";
            out += r.std_dev ? format_double(*r.std_dev) : "";
            out += ",";
            out += r.bins ? std::to_string(r.bins->first) : "";
            out += ",";
            out += r.bins ? std::to_string(r.bins->second) : "";
            out += "\n";
        }
        emit(out, a.common.output);
    } else {
        std::string out;
        for (const Row& r : rows) {
            out += r.name + "  " + format_double(r.value);
            if (r.std_dev) out += " +- " + format_double(*r.std_dev);
            if (r.bins)
                out += "  (bins " + std::to_string(r.bins->first) + "x" +
                       std::to_string(r.bins->second) + ")";
            out += "\n";
        }
        emit(out, a.common.output);
    }
    return 0;
}

// ----------------------------------------------------------- optbins ----

struct OptBinsArgs {
    CommonFlags common;
    std::string input;
    std::string column;
};

int run_optbins(const OptBinsArgs& a) {
    LoadOptions opt;
    if (!a.column.empty()) opt.used_columns = std::vector<std::string>{a.column};
    const DataTable t = load_table_file(a.input, opt);
    const std::vector<double>& data = t.columns[0];

    OptBinsConfig cfg;
    cfg.beta = a.common.beta;
    cfg.max_bins = a.common.max_bins > 0
                       ? a.common.max_bins
                       : default_max_bins(static_cast<std::int64_t>(data.size()));
    const std::vector<double> curve = log_posterior_curve(data, cfg);
    std::int64_t best = 1;
    for (std::size_t i = 1; i < curve.size(); ++i)
        if (curve[i] > curve[static_cast<std::size_t>(best) - 1])
            best = static_cast<std::int64_t>(i) + 1;

    if (a.common.format == "json") {
        ordered_json j;
        j["params"] = {{"input", a.input},
                       {"column", t.column_names[0]},
                       {"beta", cfg.beta},
                       {"max_bins", cfg.max_bins},
                       {"rows_used", t.n_rows},
                       {"rows_dropped", t.dropped_rows}};
        j["selected_m"] = best;
        j["curve"] = curve;
        emit(dump_json(j), a.common.output);
    } else {
        std::string out = "selected_m," + std::to_string(best) + "\n";
        out += "m,log_posterior\n";
        for (std::size_t i = 0; i < curve.size(); ++i)
            out += std::to_string(i + 1) + "," + format_double(curve[i]) + "\n";
        emit(out, a.common.output);
    }
    return 0;
}

// ------------------------------------------------------------- sweep ----

struct SweepArgs {
    CommonFlags common;
    std::vector<double> couplings;
    std::vector<std::string> method_tokens = {"bayes:0.05", "bayes:0.5", "fixed:30", "adaptive",
                                              "corr"};
    std::int64_t n = 10000;
    std::int64_t burn_in = 1000;
    std::int64_t n_seeds = 10;
    bool assert_fig2 = false;
};

std::vector<MethodSpec> parse_methods(const std::vector<std::string>& tokens,
                                      const AdaptiveConfig& acfg) {
    std::vector<MethodSpec> methods;
    for (const std::string& tok : tokens) {
        if (tok == "adaptive") {
            methods.push_back(MethodSpec::adaptive_method(acfg));
        } else if (tok == "corr") {
            methods.push_back(MethodSpec::correlation_method());
        } else if (tok.rfind("bayes:", 0) == 0) {
            methods.push_back(MethodSpec::bayes_method(std::stod(tok.substr(6))));
        } else if (tok.rfind("fixed:", 0) == 0) {
            methods.push_back(MethodSpec::fixed_hist_method(std::stoll(tok.substr(6))));
        } else {
            throw CLI::ValidationError("--methods",
                                       "unknown method '" + tok +
                                           "' (use bayes:<beta>, fixed:<m>, adaptive, corr)");
        }
    }
    return methods;
}

int run_sweep_cmd(const SweepArgs& a) {
    std::vector<double> couplings = a.couplings;
    if (couplings.empty())
        for (int i = 1; i <= 10; ++i) couplings.push_back(0.1 * i);

    SweepConfig cfg;
    cfg.n = a.n;
    cfg.burn_in = a.burn_in;
    cfg.n_draws = a.common.draws;
    cfg.max_bins = a.common.max_bins;
    cfg.seeds.clear();
    for (std::int64_t i = 0; i < a.n_seeds; ++i) cfg.seeds.push_back(a.common.seed + i);

    const std::vector<MethodSpec> methods =
        parse_methods(a.method_tokens, adaptive_config(a.common));
    const SweepResult result = run_sweep(couplings, methods, cfg);

    if (a.common.output.empty()) {
        std::cout << sweep_to_csv(result);
    } else {
        emit(sweep_to_csv(result), a.common.output + ".csv");
        emit(dump_json(sweep_to_json(result)), a.common.output + ".json");
        emit(sweep_to_long_csv(result), a.common.output + "_long.csv");
    }

    if (a.assert_fig2) {
        // highest-bias ordering at the weakest coupling
        std::size_t smallest = 0;
        for (std::size_t i = 1; i < result.rows.size(); ++i)
            if (result.rows[i].coupling < result.rows[smallest].coupling) smallest = i;
        const SweepRow& row = result.rows[smallest];
        const auto fixed = row.estimates.find("fixed_m30");
        const auto bayes = row.estimates.find("bayes_beta0.05");
        if (fixed == row.estimates.end() || bayes == row.estimates.end())
            throw CLI::ValidationError("--assert-fig2",
                                       "needs methods fixed:30 and bayes:0.05");
        if (!(fixed->second.mean > bayes->second.mean)) {
            std::cerr << "bias ordering violated: fixed_m30 " << format_double(fixed->second.mean)
                      << " <= bayes_beta0.05 " << format_double(bayes->second.mean) << "\n";
            return 1;
        }
    }
    return 0;
}

// -------------------------------------------------------------- rank ----

struct RankArgs {
    CommonFlags common;
    std::string input;
    std::string target;
    std::vector<std::string> bias; // two column names
    std::string bias_name = "bias";
};

int run_rank(const RankArgs& a) {
    DataTable t = load_table_file(a.input);
    std::string target = a.target;
    if (!a.bias.empty()) {
        t = compute_bias(t, a.bias[0], a.bias[1], a.bias_name);
        target = a.bias_name;
    }
    if (target.empty()) throw LoadError("give --target or --bias");

    RankingConfig cfg;
    cfg.beta = a.common.beta;
    cfg.n_draws = a.common.draws;
    cfg.max_bins = a.common.max_bins;
    cfg.adaptive = adaptive_config(a.common);
    const DependencyReport report = rank_dependencies(t, target, cfg, a.common.seed);

    if (a.common.format == "json")
        emit(dump_json(report_to_json(report)), a.common.output);
    else if (a.common.format == "csv")
        emit(report_to_csv(report), a.common.output);
    else
        emit(report_to_text(report), a.common.output);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mutinfo: mutual-information dependency estimation toolkit"};
    app.require_subcommand(1);

    MiArgs mi_args;
    CLI::App* mi_cmd = app.add_subcommand("mi", "estimate MI / correlation between two columns");
    mi_cmd->add_option("--input", mi_args.input, "CSV file (header + numeric rows)")->required();
    mi_cmd->add_option("--x", mi_args.x_col, "x column name (default: first column)");
    mi_cmd->add_option("--y", mi_args.y_col, "y column name (default: second column)");
    mi_cmd->add_option("--method", mi_args.method, "bayes | fixed | adaptive | corr | all")
        ->check(CLI::IsMember({"bayes", "fixed", "adaptive", "corr", "all"}))
        ->capture_default_str();
    mi_cmd->add_option("--fixed-bins", mi_args.fixed_bins, "bins per axis for the fixed method")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    mi_cmd->add_option("--bins-x", mi_args.bins_x, "explicit joint bins (x axis) for bayes")
        ->check(CLI::PositiveNumber);
    mi_cmd->add_option("--bins-y", mi_args.bins_y, "explicit joint bins (y axis) for bayes")
        ->check(CLI::PositiveNumber);
    mi_cmd->add_option("--dump-partition", mi_args.dump_partition,
                       "write the adaptive partition tree to this file as JSON");
    add_estimator_flags(mi_cmd, mi_args.common);
    mi_cmd->add_option("--base", mi_args.common.base, "output units for MI")
        ->check(CLI::IsMember({"nats", "bits"}))
        ->capture_default_str();
    mi_cmd->add_option("--format", mi_args.common.format, "text | csv | json")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    mi_cmd->add_option("--output", mi_args.common.output,
                       "write the report here instead of stdout");

    OptBinsArgs ob_args;
    CLI::App* ob_cmd =
        app.add_subcommand("optbins", "Bayesian bin-count selection for one column");
    ob_cmd->add_option("--input", ob_args.input, "CSV file")->required();
    ob_cmd->add_option("--column", ob_args.column, "column name (default: first column)");
    add_estimator_flags(ob_cmd, ob_args.common);
    ob_cmd->add_option("--format", ob_args.common.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    ob_cmd->add_option("--output", ob_args.common.output,
                       "write the report here instead of stdout");

    SweepArgs sweep_args;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "coupled-AR benchmark sweep with analytic ground truth");
    sweep_cmd->add_option("--couplings", sweep_args.couplings,
                          "coupling grid (default 0.1 .. 1.0)");
    sweep_cmd->add_option("--methods", sweep_args.method_tokens,
                          "bayes:<beta> fixed:<m> adaptive corr")
        ->capture_default_str();
    sweep_cmd->add_option("--n", sweep_args.n, "samples per simulation")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sweep_cmd->add_option("--burn-in", sweep_args.burn_in, "discarded leading samples")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    sweep_cmd->add_option("--seeds", sweep_args.n_seeds, "number of repetitions per coupling")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sweep_cmd->add_flag("--assert-fig2", sweep_args.assert_fig2,
                        "exit nonzero unless fixed:30 overshoots bayes:0.05 at the weakest "
                        "coupling");
    add_estimator_flags(sweep_cmd, sweep_args.common);
    sweep_cmd->add_option("--output", sweep_args.common.output,
                          "file prefix; writes <prefix>.csv, <prefix>.json, <prefix>_long.csv");

    RankArgs rank_args;
    CLI::App* rank_cmd =
        app.add_subcommand("rank", "rank every column's dependency with a target column");
    rank_cmd->add_option("--input", rank_args.input, "CSV file")->required();
    rank_cmd->add_option("--target", rank_args.target, "target column");
    rank_cmd->add_option("--bias", rank_args.bias, "two columns A B; target becomes A - B")
        ->expected(2);
    rank_cmd->add_option("--bias-name", rank_args.bias_name, "name of the constructed column")
        ->capture_default_str();
    add_estimator_flags(rank_cmd, rank_args.common);
    rank_cmd->add_option("--format", rank_args.common.format, "text | csv | json")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    rank_cmd->add_option("--output", rank_args.common.output,
                         "write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // 0
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (mi_cmd->parsed()) return run_mi(mi_args);
        if (ob_cmd->parsed()) return run_optbins(ob_args);
        if (sweep_cmd->parsed()) return run_sweep_cmd(sweep_args);
        if (rank_cmd->parsed()) return run_rank(rank_args);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
