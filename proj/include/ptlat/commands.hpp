#pragma once

#include <filesystem>
#include <string>

#include "ptlat/config.hpp"

namespace ptlat {

// Runs one CLI command and writes its output files into out_dir. Throws
// std::invalid_argument / std::runtime_error on failure; the caller turns
// that into the error JSON and a nonzero exit.
void run_command(const std::string& command, const RunConfig& cfg,
                 const std::filesystem::path& out_dir, int threads);

// Human-readable description of the files a command writes, for --help.
std::string output_schema(const std::string& command);

}  // namespace ptlat
