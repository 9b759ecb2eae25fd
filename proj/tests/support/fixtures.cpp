#include "fixtures.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "mutinfo/format.hpp"

namespace fixtures {

mutinfo::Pmf random_pmf(mutinfo::Rng& rng, std::size_t m) {
    mutinfo::Pmf p;
    p.probs.resize(m);
    double sum = 0.0;
    for (double& v : p.probs) {
        v = -std::log(rng.uniform_open()); // Exp(1)
        sum += v;
    }
    for (double& v : p.probs) v /= sum;
    return p;
}

mutinfo::JointPmf random_joint_pmf(mutinfo::Rng& rng, std::size_t rows, std::size_t cols) {
    mutinfo::JointPmf p;
    p.rows = rows;
    p.cols = cols;
    p.probs.resize(rows * cols);
    double sum = 0.0;
    for (double& v : p.probs) {
        v = -std::log(rng.uniform_open());
        sum += v;
    }
    for (double& v : p.probs) v /= sum;
    return p;
}

std::vector<double> gaussian_sample(std::uint64_t seed, std::size_t n) {
    mutinfo::Rng rng(seed);
    std::vector<double> out(n);
    for (double& v : out) v = rng.normal();
    return out;
}

std::vector<double> uniform_sample(std::uint64_t seed, std::size_t n) {
    mutinfo::Rng rng(seed);
    std::vector<double> out(n);
    for (double& v : out) v = rng.uniform();
    return out;
}

mutinfo::DataTable nonlinear_ranking_table(std::uint64_t seed, std::size_t n, double noise_std) {
    if (n % 2 != 0) throw std::invalid_argument("fixture size must be even");
    mutinfo::Rng rng(seed);

    std::vector<double> v1(n);
    for (std::size_t i = 0; i < n; i += 2) {
        const double u = rng.uniform_open() * 2.0 - 1.0;
        v1[i] = u;
        v1[i + 1] = -u; // antithetic: the sample is exactly symmetric
    }

    mutinfo::DataTable t;
    t.n_rows = static_cast<std::int64_t>(n);
    t.column_names = {"v1", "v2", "v3", "v4", "v5", "target"};
    t.columns.resize(6);
    t.columns[0] = v1;
    for (std::size_t c = 1; c < 5; ++c) {
        t.columns[c].resize(n);
        for (double& v : t.columns[c]) v = rng.normal();
    }
    t.columns[5].resize(n);
    for (std::size_t i = 0; i < n; ++i)
        t.columns[5][i] = v1[i] * v1[i] + noise_std * rng.normal();
    return t;
}

void write_xy_csv(const std::string& path, const std::vector<double>& x,
                  const std::vector<double>& y) {
    std::ofstream out(path);
    out << "x,y\n";
    for (std::size_t i = 0; i < x.size(); ++i)
        out << mutinfo::format_double(x[i]) << "," << mutinfo::format_double(y[i]) << "\n";
}

void write_table_csv(const std::string& path, const mutinfo::DataTable& t) {
    std::ofstream out(path);
    for (std::size_t c = 0; c < t.column_names.size(); ++c)
        out << t.column_names[c] << (c + 1 < t.column_names.size() ? "," : "\n");
    for (std::int64_t r = 0; r < t.n_rows; ++r)
        for (std::size_t c = 0; c < t.columns.size(); ++c)
            out << mutinfo::format_double(t.columns[c][static_cast<std::size_t>(r)])
                << (c + 1 < t.columns.size() ? "," : "\n");
}

} // namespace fixtures
