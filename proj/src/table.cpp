#include "mutinfo/table.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>

#include "mutinfo/format.hpp"

namespace mutinfo {

bool DataTable::has_column(const std::string& name) const {
    return std::find(column_names.begin(), column_names.end(), name) != column_names.end();
}

const std::vector<double>& DataTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < column_names.size(); ++i)
        if (column_names[i] == name) return columns[i];
    throw LoadError("no column named '" + name + "'");
}

namespace {

bool parse_field(const std::string& field, double& out) {
    const std::string t = trim(field);
    if (t.empty()) return false;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last && std::isfinite(out);
}

} // namespace

DataTable load_table(std::istream& in, const LoadOptions& options) {
    std::string line;
    if (!std::getline(in, line)) throw LoadError("input is empty");

    std::vector<std::string> header;
    for (const std::string& f : split_csv_line(line)) {
        const std::string name = trim(f);
        if (name.empty()) throw LoadError("malformed header: empty column name");
        header.push_back(name);
    }
    {
        std::set<std::string> unique(header.begin(), header.end());
        if (unique.size() != header.size()) throw LoadError("duplicate column names in header");
    }

    // Indices of the columns that are kept.
    std::vector<std::size_t> used;
    if (options.used_columns) {
        for (const std::string& want : *options.used_columns) {
            auto it = std::find(header.begin(), header.end(), want);
            if (it == header.end()) throw LoadError("no column named '" + want + "' in header");
            used.push_back(static_cast<std::size_t>(it - header.begin()));
        }
    } else {
        for (std::size_t i = 0; i < header.size(); ++i) used.push_back(i);
    }

    DataTable t;
    for (std::size_t i : used) t.column_names.push_back(header[i]);
    t.columns.resize(used.size());

    std::vector<double> row(used.size());
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        const std::vector<std::string> fields = split_csv_line(line);
        bool ok = fields.size() == header.size();
        for (std::size_t k = 0; ok && k < used.size(); ++k)
            ok = parse_field(fields[used[k]], row[k]);
        if (!ok) {
            ++t.dropped_rows;
            continue;
        }
        for (std::size_t k = 0; k < used.size(); ++k) t.columns[k].push_back(row[k]);
        ++t.n_rows;
    }

    if (t.n_rows < options.min_rows)
        throw LoadError("only " + std::to_string(t.n_rows) + " usable rows (" +
                        std::to_string(t.dropped_rows) + " dropped); need at least " +
                        std::to_string(options.min_rows));
    return t;
}

DataTable load_table_file(const std::string& path, const LoadOptions& options) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open '" + path + "'");
    return load_table(in, options);
}

DataTable compute_bias(const DataTable& t, const std::string& col_a, const std::string& col_b,
                       const std::string& out_name) {
    if (!t.has_column(col_a)) throw LoadError("no column named '" + col_a + "'");
    if (!t.has_column(col_b)) throw LoadError("no column named '" + col_b + "'");
    if (t.has_column(out_name)) throw LoadError("column '" + out_name + "' already exists");
    if (out_name.empty()) throw LoadError("bias column needs a nonempty name");

    const std::vector<double>& a = t.column(col_a);
    const std::vector<double>& b = t.column(col_b);
    DataTable out = t;
    out.column_names.push_back(out_name);
    std::vector<double> bias(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) bias[i] = a[i] - b[i];
    out.columns.push_back(std::move(bias));
    return out;
}

} // namespace mutinfo
