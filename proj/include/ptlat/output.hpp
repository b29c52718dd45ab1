#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace ptlat {

// One CSV document with cells already formatted (fmt17 for floats).
struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_to_string(const Csv& csv);

// UTF-8, comma separators, LF line endings.
void write_csv(const std::filesystem::path& path, const Csv& csv);

void write_text(const std::filesystem::path& path, const std::string& text);

// Parses a numeric CSV produced by this tool: header row plus double cells.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

CsvTable read_csv(const std::filesystem::path& path);

}  // namespace ptlat
