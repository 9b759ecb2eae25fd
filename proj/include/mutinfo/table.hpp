#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "mutinfo/errors.hpp"

namespace mutinfo {

/// Column-oriented numeric table with unique, nonempty column names.
struct DataTable {
    std::vector<std::string> column_names;
    std::vector<std::vector<double>> columns;
    std::int64_t n_rows = 0;
    std::int64_t dropped_rows = 0; // rows discarded while loading

    bool has_column(const std::string& name) const;
    const std::vector<double>& column(const std::string& name) const; // LoadError if absent
};

struct LoadOptions {
    /// When set, only these header columns are parsed and kept; a row is
    /// dropped only if a field in a used column is missing or non-numeric.
    std::optional<std::vector<std::string>> used_columns;
    /// Minimum usable rows after dropping (default 10).
    std::int64_t min_rows = 10;
};

/// Parses comma-separated values with a header row. Rows with missing or
/// non-parsable fields in used columns are dropped and counted. Throws
/// LoadError on a malformed header, duplicate column names, or fewer than
/// min_rows surviving rows.
DataTable load_table(std::istream& in, const LoadOptions& options = {});

DataTable load_table_file(const std::string& path, const LoadOptions& options = {});

/// Appends the element-wise difference col_a - col_b as a new column.
DataTable compute_bias(const DataTable& t, const std::string& col_a, const std::string& col_b,
                       const std::string& out_name);

} // namespace mutinfo
