#pragma once

#include <string>
#include <vector>

namespace mutinfo {

/// Locale-independent full-precision float formatting ("%.17g"); every
/// number the toolkit prints goes through here so output is byte-stable.
std::string format_double(double v);

/// Split one CSV line on commas (no quoting; fields are numeric or names).
std::vector<std::string> split_csv_line(const std::string& line);

std::string trim(const std::string& s);

} // namespace mutinfo
