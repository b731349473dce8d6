#include "nvirrad/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "nvirrad/errors.hpp"

namespace nvirrad {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

std::map<std::string, std::string> read_key_value_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw config_error("cannot open key=value file: " + path);
  }
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw config_error(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw config_error(path + ":" + std::to_string(lineno) + ": empty key or value");
    }
    if (!out.emplace(key, value).second) {
      throw config_error(path + ": duplicate key '" + key + "'");
    }
  }
  return out;
}

const std::vector<double>& CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return columns[i];
  }
  throw config_error("CSV column not found: " + name);
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw config_error("cannot open CSV file: " + path);
  }
  CsvTable table;
  std::string line;
  int lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::stringstream row(line);
    std::string cell;
    if (!have_header) {
      while (std::getline(row, cell, ',')) {
        table.header.push_back(trim(cell));
      }
      table.columns.resize(table.header.size());
      have_header = true;
      continue;
    }
    std::size_t i = 0;
    while (std::getline(row, cell, ',')) {
      if (i >= table.columns.size()) {
        throw config_error(path + ":" + std::to_string(lineno) + ": too many fields");
      }
      try {
        table.columns[i].push_back(std::stod(trim(cell)));
      } catch (const std::exception&) {
        throw config_error(path + ":" + std::to_string(lineno) + ": not a number: " + cell);
      }
      ++i;
    }
    if (i != table.columns.size()) {
      throw config_error(path + ":" + std::to_string(lineno) + ": too few fields");
    }
  }
  if (!have_header) {
    throw config_error(path + ": empty CSV");
  }
  return table;
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", value);
  return buf;
}

}  // namespace nvirrad
