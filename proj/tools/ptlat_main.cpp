#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

#include "ptlat/commands.hpp"
#include "ptlat/config.hpp"
#include "ptlat/version.hpp"

namespace {

struct CommandInfo {
  const char* name;
  const char* brief;
};

const CommandInfo kCommands[] = {
    {"spectrum", "Eigenvalues of one lattice instance."},
    {"sweep-phi", "Spectrum vs phase over a linspace grid."},
    {"critical-gamma", "Bisect the critical non-Hermitian degree gamma_c."},
    {"phase-diagram", "max_imag and zero-mode count over a (phi, gamma) grid."},
    {"zero-modes", "Zero-energy edge modes with IPR and edge weight."},
    {"check-pt", "Matrix-level PT-invariance test."},
    {"majorana", "Two-band Majorana decomposition (beta = 1/2)."},
    {"n-scan", "Spectrum reality vs chain length at a probe gamma."},
    {"localization", "Mean IPR vs potential strength for the diagonal model."},
    {"plot", "Render a CSV produced by another command into an SVG chart."},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "ptlat: spectra of PT-symmetric non-Hermitian Aubry-Andre lattices"};
  app.set_version_flag("--version", ptlat::kVersion);
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  int threads = 0;
  for (const auto& info : kCommands) {
    CLI::App* sub = app.add_subcommand(
        info.name,
        std::string(info.brief) + " " + ptlat::output_schema(info.name));
    sub->add_option("--config", config_path, "Path to the key=value config file")
        ->required();
    sub->add_option("--out", out_dir, "Output directory (created if missing)");
    sub->add_option("--threads", threads,
                    "Worker-thread cap; 0 uses all hardware threads");
  }

  CLI11_PARSE(app, argc, argv);
  std::string command = app.get_subcommands().front()->get_name();
  try {
    ptlat::RunConfig cfg = ptlat::load_config(config_path);
    ptlat::run_command(command, cfg, out_dir, threads);
  } catch (const std::exception& e) {
    nlohmann::json err;
    err["command"] = command;
    err["error"] = e.what();
    std::cout << err.dump(2) << std::endl;
    return 1;
  }
  return 0;
}
