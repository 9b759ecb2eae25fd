#include "mutinfo/ar_benchmark.hpp"

#include <cmath>
#include <sstream>

#include "mutinfo/estimators.hpp"
#include "mutinfo/format.hpp"
#include "mutinfo/rng.hpp"

namespace mutinfo {

namespace {
void check_stationary(const ARParams& p) {
    if (!(std::abs(p.a_y) < 1.0 && std::abs(p.a_x) < 1.0))
        throw DomainError("AR coefficients must satisfy |a| < 1");
    if (!(p.noise_std > 0.0)) throw DomainError("noise_std must be > 0");
}
} // namespace

double ArMoments::rho() const {
    return cov / std::sqrt(var_x * var_y);
}

ArMoments stationary_moments(const ARParams& p) {
    check_stationary(p);
    const double s2 = p.noise_std * p.noise_std;
    ArMoments m;
    m.var_y = s2 / (1.0 - p.a_y * p.a_y);
    m.cov = p.a_y * p.coupling * m.var_y / (1.0 - p.a_x * p.a_y);
    m.var_x = (p.coupling * p.coupling * m.var_y + s2 + 2.0 * p.a_x * p.coupling * m.cov) /
              (1.0 - p.a_x * p.a_x);
    return m;
}

SeriesPair simulate_coupled_ar(const ARParams& p, std::int64_t n, std::int64_t burn_in,
                               std::uint64_t seed) {
    check_stationary(p);
    if (n < 2) throw DomainError("need at least 2 samples");
    if (burn_in < 0) throw DomainError("burn_in must be >= 0");

    SeriesPair s;
    s.x.reserve(static_cast<std::size_t>(n));
    s.y.reserve(static_cast<std::size_t>(n));

    Rng rng(seed);
    double y = 0.0, x = 0.0;
    for (std::int64_t i = 0; i < burn_in + n; ++i) {
        const double n1 = p.noise_std * rng.normal();
        const double n2 = p.noise_std * rng.normal();
        const double y_next = p.a_y * y + n1;
        const double x_next = p.a_x * x + p.coupling * y + n2;
        y = y_next;
        x = x_next;
        if (i >= burn_in) {
            s.x.push_back(x);
            s.y.push_back(y);
        }
    }
    return s;
}

double analytic_mi_coupled_ar(const ARParams& p) {
    const ArMoments m = stationary_moments(p);
    const double rho = m.rho();
    const double mi = -0.5 * std::log1p(-rho * rho);
    return mi == 0.0 ? 0.0 : mi; // normalize -0.0
}

std::string MethodSpec::name() const {
    switch (kind) {
        case Kind::bayes: {
            std::ostringstream os;
            os << "bayes_beta" << beta;
            return os.str();
        }
        case Kind::fixed_hist:
            return "fixed_m" + std::to_string(fixed_bins);
        case Kind::adaptive:
            return "adaptive";
        case Kind::correlation:
            return "corr";
    }
    return "unknown";
}

namespace {

struct CellOutcome {
    bool ok = false;
    double value = 0.0;
};

EstimateWithError across_seeds(const std::vector<double>& vals) {
    EstimateWithError e;
    e.n_draws = static_cast<std::int64_t>(vals.size());
    double mean = 0.0;
    for (double v : vals) mean += v;
    mean /= static_cast<double>(vals.size());
    double ss = 0.0;
    for (double v : vals) ss += (v - mean) * (v - mean);
    e.mean = mean;
    e.std_dev = vals.size() > 1 ? std::sqrt(ss / static_cast<double>(vals.size() - 1)) : 0.0;
    return e;
}

} // namespace

SweepResult run_sweep(std::span<const double> couplings, const std::vector<MethodSpec>& methods,
                      const SweepConfig& cfg) {
    if (couplings.empty()) throw DomainError("coupling grid is empty");
    if (cfg.seeds.empty()) throw DomainError("need at least one seed");

    SweepResult result;
    result.config = cfg;
    for (const MethodSpec& m : methods) result.method_names.push_back(m.name());

    for (std::size_t ci = 0; ci < couplings.size(); ++ci) {
        ARParams params = cfg.params;
        params.coupling = couplings[ci];

        SweepRow row;
        row.coupling = couplings[ci];
        row.analytic_mi = analytic_mi_coupled_ar(params);

        std::vector<std::vector<double>> per_method(methods.size());
        for (std::size_t si = 0; si < cfg.seeds.size(); ++si) {
            const std::uint64_t cell_seed = derive_seed(cfg.seeds[si], ci);
            const SeriesPair s = simulate_coupled_ar(params, cfg.n, cfg.burn_in, cell_seed);

            for (std::size_t mi = 0; mi < methods.size(); ++mi) {
                const MethodSpec& method = methods[mi];
                try {
                    double value = 0.0;
                    switch (method.kind) {
                        case MethodSpec::Kind::bayes: {
                            const BinChoice bins = BinChoice::auto_bins(cfg.max_bins);
                            const auto [bx, by] = choose_joint_bins(s, method.beta, bins);
                            if (!row.selected_bins) row.selected_bins = {{bx, by}};
                            const EstimateWithError est =
                                mi_bayes(s, method.beta, BinChoice::fixed(bx, by), cfg.n_draws,
                                         derive_seed(cell_seed, mi));
                            value = est.mean;
                            break;
                        }
                        case MethodSpec::Kind::fixed_hist:
                            value = mi_fixed_hist(s, method.fixed_bins);
                            break;
                        case MethodSpec::Kind::adaptive:
                            value = mi_adaptive(s, method.adaptive_config, LogBase::natural);
                            break;
                        case MethodSpec::Kind::correlation:
                            value = correlation(s);
                            break;
                    }
                    per_method[mi].push_back(value);
                } catch (const Error&) {
                    // failed cell: recorded as missing, never fatal
                }
            }
        }

        for (std::size_t mi = 0; mi < methods.size(); ++mi)
            if (!per_method[mi].empty())
                row.estimates[result.method_names[mi]] = across_seeds(per_method[mi]);
        result.rows.push_back(std::move(row));
    }
    return result;
}

std::string sweep_to_csv(const SweepResult& r) {
    std::ostringstream os;
    os << "coupling,analytic_mi";
    for (const std::string& m : r.method_names) os << "," << m << "_mean," << m << "_std";
    os << ",selected_m_x,selected_m_y\n";
    for (const SweepRow& row : r.rows) {
        os << format_double(row.coupling) << "," << format_double(row.analytic_mi);
        for (const std::string& m : r.method_names) {
            auto it = row.estimates.find(m);
            if (it == row.estimates.end())
                os << ",,";
            else
                os << "," << format_double(it->second.mean) << ","
                   << format_double(it->second.std_dev);
        }
        if (row.selected_bins)
            os << "," << row.selected_bins->first << "," << row.selected_bins->second;
        else
            os << ",,";
        os << "\n";
    }
    return os.str();
}

std::string sweep_to_long_csv(const SweepResult& r) {
    std::ostringstream os;
    os << "coupling,method,value\n";
    for (const SweepRow& row : r.rows) {
        os << format_double(row.coupling) << ",analytic," << format_double(row.analytic_mi)
           << "\n";
        for (const std::string& m : r.method_names) {
            auto it = row.estimates.find(m);
            if (it != row.estimates.end())
                os << format_double(row.coupling) << "," << m << ","
                   << format_double(it->second.mean) << "\n";
        }
    }
    return os.str();
}

nlohmann::ordered_json sweep_to_json(const SweepResult& r) {
    nlohmann::ordered_json j;
    j["params"] = {{"n", r.config.n},
                   {"burn_in", r.config.burn_in},
                   {"n_seeds", r.config.seeds.size()},
                   {"seeds", r.config.seeds},
                   {"n_draws", r.config.n_draws},
                   {"max_bins", r.config.max_bins},
                   {"a_y", r.config.params.a_y},
                   {"a_x", r.config.params.a_x},
                   {"noise_std", r.config.params.noise_std}};
    j["methods"] = r.method_names;
    j["rows"] = nlohmann::ordered_json::array();
    for (const SweepRow& row : r.rows) {
        nlohmann::ordered_json jr;
        jr["coupling"] = row.coupling;
        jr["analytic_mi"] = row.analytic_mi;
        jr["estimates"] = nlohmann::ordered_json::object();
        for (const std::string& m : r.method_names) {
            auto it = row.estimates.find(m);
            if (it == row.estimates.end()) continue;
            jr["estimates"][m] = {{"mean", it->second.mean},
                                  {"std", it->second.std_dev},
                                  {"n", it->second.n_draws}};
        }
        if (row.selected_bins)
            jr["selected_bins"] = {row.selected_bins->first, row.selected_bins->second};
        else
            jr["selected_bins"] = nullptr;
        j["rows"].push_back(std::move(jr));
    }
    return j;
}

} // namespace mutinfo
