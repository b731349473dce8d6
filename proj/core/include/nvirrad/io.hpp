#pragma once

#include <map>
#include <string>
#include <vector>

namespace nvirrad {

// Plain-text key=value file. '#' starts a comment, blank lines are skipped.
// Duplicate keys are a config_error.
std::map<std::string, std::string> read_key_value_file(const std::string& path);

// Numeric CSV with a single header row. Lines starting with '#' are skipped.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;  // column-major, one vector per header field

  std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }
  const std::vector<double>& column(const std::string& name) const;
};

CsvTable read_csv(const std::string& path);

// Canonical number formatting for all CSV output ("%.10g").
std::string format_double(double value);

}  // namespace nvirrad
