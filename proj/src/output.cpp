#include "ptlat/output.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ptlat {

std::string csv_to_string(const Csv& csv) {
  std::string out;
  for (size_t c = 0; c < csv.header.size(); ++c) {
    if (c) out += ",";
    out += csv.header[c];
  }
  out += "\n";
  for (const auto& row : csv.rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) out += ",";
      out += row[c];
    }
    out += "\n";
  }
  return out;
}

void write_csv(const std::filesystem::path& path, const Csv& csv) {
  write_text(path, csv_to_string(csv));
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + path.string() +
                             "' for writing");
  }
  out << text;
  if (!out) {
    throw std::runtime_error("failed writing '" + path.string() + "'");
  }
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open '" + path.string() + "'");
  }
  CsvTable table;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    if (first) {
      while (std::getline(ss, cell, ',')) table.header.push_back(cell);
      first = false;
      continue;
    }
    std::vector<double> row;
    while (std::getline(ss, cell, ',')) {
      const char* begin = cell.c_str();
      char* end = nullptr;
      double x = std::strtod(begin, &end);
      if (end == begin) {
        throw std::runtime_error("non-numeric cell '" + cell + "' in '" +
                                 path.string() + "'");
      }
      row.push_back(x);
    }
    if (row.size() != table.header.size()) {
      throw std::runtime_error("ragged row in '" + path.string() + "'");
    }
    table.rows.push_back(std::move(row));
  }
  if (table.header.empty()) {
    throw std::runtime_error("empty CSV '" + path.string() + "'");
  }
  return table;
}

}  // namespace ptlat
