#include "ptlat/commands.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

#include "ptlat/analysis.hpp"
#include "ptlat/eig.hpp"
#include "ptlat/output.hpp"
#include "ptlat/svg.hpp"
#include "ptlat/sweep.hpp"
#include "ptlat/version.hpp"

namespace ptlat {

namespace {

using nlohmann::json;

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> grid(count);
  if (count == 1) {
    grid[0] = lo;
    return grid;
  }
  for (int i = 0; i < count; ++i) {
    grid[i] = lo + (hi - lo) * i / (count - 1);
  }
  grid.back() = hi;
  return grid;
}

SweepOptions make_options(const RunConfig& cfg, int threads) {
  SweepOptions opt;
  opt.eps_real = cfg.eps_real;
  opt.eps_zero = cfg.eps_zero;
  opt.w_min = cfg.w_min;
  opt.fraction = cfg.fraction;
  opt.phi_points = cfg.phi_points;
  opt.threads = threads;
  return opt;
}

std::string file_stem(const std::string& command) {
  std::string stem = command;
  for (char& c : stem) {
    if (c == '-') c = '_';
  }
  return stem;
}

void write_summary(const std::filesystem::path& out_dir,
                   const std::string& command, const RunConfig& cfg,
                   const json& result) {
  json doc;
  doc["config"] = cfg.echo;
  doc["result"] = result;
  doc["version"] = kVersion;
  write_text(out_dir / (file_stem(command) + ".json"), doc.dump(2) + "\n");
}

void cmd_spectrum(const RunConfig& cfg, const std::filesystem::path& out_dir) {
  EigenSystem sys = eigendecompose(build_hamiltonian(cfg.spec));
  Csv csv;
  csv.header = {"index", "re", "im", "residual"};
  for (int k = 0; k < cfg.spec.n; ++k) {
    csv.rows.push_back({std::to_string(k + 1), fmt17(sys.values(k).real()),
                        fmt17(sys.values(k).imag()), fmt17(sys.residuals(k))});
  }
  write_csv(out_dir / "spectrum.csv", csv);

  json result;
  result["n"] = cfg.spec.n;
  result["max_imag"] = max_imag(sys);
  result["real"] = is_spectrum_real(sys, cfg.eps_real);
  write_summary(out_dir, "spectrum", cfg, result);
}

void cmd_sweep_phi(const RunConfig& cfg, const std::filesystem::path& out_dir,
                   int threads) {
  auto grid = linspace(cfg.phi_min, cfg.phi_max, cfg.phi_count);
  SweepResult r = sweep_phi(cfg.spec, grid, make_options(cfg, threads));

  Csv csv;
  csv.header = {"phi", "index", "re", "im"};
  for (size_t i = 0; i < r.grid.size(); ++i) {
    const auto& rec = r.records[i];
    for (int k = 0; k < rec.values.size(); ++k) {
      csv.rows.push_back({fmt17(r.grid[i]), std::to_string(k + 1),
                          fmt17(rec.values(k).real()),
                          fmt17(rec.values(k).imag())});
    }
  }
  write_csv(out_dir / "sweep_phi.csv", csv);

  TransitionReport tr = transition_phis(r);
  json per_point = json::array();
  for (size_t i = 0; i < r.grid.size(); ++i) {
    per_point.push_back({{"phi", r.grid[i]},
                         {"max_imag", r.records[i].max_imag},
                         {"zero_modes", r.records[i].zero_mode_count},
                         {"bulk_gap", r.records[i].bulk_gap}});
  }
  json intervals = json::array();
  for (const auto& [a, b] : tr.intervals) {
    intervals.push_back({a, b});
  }
  json result;
  result["points"] = r.grid.size();
  result["per_point"] = per_point;
  result["transitions"] = {{"intervals", intervals}, {"gapless", tr.gapless}};
  write_summary(out_dir, "sweep-phi", cfg, result);
}

void cmd_critical_gamma(const RunConfig& cfg,
                        const std::filesystem::path& out_dir, int threads) {
  CriticalGammaPolicy policy = cfg.policy == "fixed-phi"
                                   ? CriticalGammaPolicy::at_phi(cfg.spec.phi)
                                   : CriticalGammaPolicy::all_phi();
  CriticalGammaResult r = critical_gamma(cfg.spec, policy, cfg.gamma_max,
                                         cfg.tol_bisect,
                                         make_options(cfg, threads));
  json jp;
  jp["kind"] = cfg.policy;
  if (policy.kind == CriticalGammaPolicy::Kind::AtFixedPhi) {
    jp["phi"] = policy.phi;
  }
  json result;
  result["gamma_c"] = r.gamma_c ? json(*r.gamma_c) : json(nullptr);
  result["no_breaking"] = r.no_breaking;
  result["gamma_low"] = r.gamma_low;
  result["gamma_high"] = r.gamma_high;
  result["tol_achieved"] = r.tol;
  result["iterations"] = r.iterations;
  result["policy"] = jp;
  write_summary(out_dir, "critical-gamma", cfg, result);
}

void cmd_phase_diagram(const RunConfig& cfg,
                       const std::filesystem::path& out_dir, int threads) {
  auto pg = linspace(cfg.phi_min, cfg.phi_max, cfg.phi_count);
  auto gg = linspace(cfg.gamma_min, cfg.gamma_max, cfg.gamma_count);
  PhaseDiagramResult r =
      phase_diagram(cfg.spec, pg, gg, make_options(cfg, threads));

  Csv csv;
  csv.header = {"gamma", "phi", "max_imag", "zero_modes"};
  int real_cells = 0;
  for (size_t ig = 0; ig < gg.size(); ++ig) {
    for (size_t ip = 0; ip < pg.size(); ++ip) {
      const auto& cell = r.cells[ig * pg.size() + ip];
      csv.rows.push_back({fmt17(gg[ig]), fmt17(pg[ip]), fmt17(cell.max_imag),
                          std::to_string(cell.zero_mode_count)});
      if (cell.max_imag <= cfg.eps_real) ++real_cells;
    }
  }
  write_csv(out_dir / "phase_diagram.csv", csv);

  json result;
  result["cells"] = r.cells.size();
  result["real_fraction"] =
      static_cast<double>(real_cells) / static_cast<double>(r.cells.size());
  write_summary(out_dir, "phase-diagram", cfg, result);
}

void cmd_zero_modes(const RunConfig& cfg,
                    const std::filesystem::path& out_dir) {
  EigenSystem sys = eigendecompose(build_hamiltonian(cfg.spec));
  EdgeStateReport rep =
      find_zero_modes(sys, cfg.eps_zero, cfg.w_min, cfg.fraction);

  Csv csv;
  csv.header = {"index", "re", "im", "ipr", "edge_weight"};
  json modes = json::array();
  for (const auto& m : rep.zero_modes) {
    csv.rows.push_back({std::to_string(m.index + 1), fmt17(m.energy.real()),
                        fmt17(m.energy.imag()), fmt17(m.ipr),
                        fmt17(m.edge_weight)});
    modes.push_back({{"index", m.index + 1},
                     {"re", m.energy.real()},
                     {"im", m.energy.imag()},
                     {"ipr", m.ipr},
                     {"edge_weight", m.edge_weight}});
  }
  write_csv(out_dir / "zero_modes.csv", csv);

  json result;
  result["count"] = rep.count;
  result["bulk_gap"] = rep.bulk_gap;
  result["eps_zero"] = rep.eps_zero;
  result["w_min"] = rep.w_min;
  result["fraction"] = rep.fraction;
  result["modes"] = modes;
  write_summary(out_dir, "zero-modes", cfg, result);
}

void cmd_check_pt(const RunConfig& cfg, const std::filesystem::path& out_dir) {
  ComplexMatrix h = build_hamiltonian(cfg.spec);
  json result;
  result["pt_symmetric"] = check_pt(h);
  result["deviation"] = pt_deviation(h);
  write_summary(out_dir, "check-pt", cfg, result);
}

void cmd_majorana(const RunConfig& cfg, const std::filesystem::path& out_dir) {
  MajoranaForm mf = majorana_form(cfg.spec);
  json terms = json::array();
  for (const auto& term : mf.coupling_terms) {
    terms.push_back({{"site", term.site}, {"sign", term.sign}});
  }
  json result;
  result["delta_plus"] = {{"re", mf.delta_plus.real()},
                          {"im", mf.delta_plus.imag()}};
  result["delta_minus"] = {{"re", mf.delta_minus.real()},
                           {"im", mf.delta_minus.imag()}};
  result["coupling_terms"] = terms;
  result["touches_unpaired"] = mf.touches_unpaired;
  result["z2_nontrivial"] = mf.z2_nontrivial;
  write_summary(out_dir, "majorana", cfg, result);
}

void cmd_n_scan(const RunConfig& cfg, const std::filesystem::path& out_dir,
                int threads) {
  NScanResult r = n_scan(cfg.spec, cfg.n_values, cfg.gamma_probe,
                         make_options(cfg, threads));
  Csv csv;
  csv.header = {"n", "real", "worst_imag"};
  json records = json::array();
  for (const auto& rec : r.records) {
    csv.rows.push_back({std::to_string(rec.n), rec.real ? "1" : "0",
                        fmt17(rec.worst_imag)});
    records.push_back(
        {{"n", rec.n}, {"real", rec.real}, {"worst_imag", rec.worst_imag}});
  }
  write_csv(out_dir / "n_scan.csv", csv);

  json result;
  result["gamma_probe"] = r.gamma_probe;
  result["records"] = records;
  write_summary(out_dir, "n-scan", cfg, result);
}

void cmd_localization(const RunConfig& cfg,
                      const std::filesystem::path& out_dir, int threads) {
  auto vg = linspace(cfg.v_min, cfg.v_max, cfg.v_count);
  LocalizationScanResult r =
      localization_scan(cfg.spec, vg, make_options(cfg, threads));
  Csv csv;
  csv.header = {"v", "mean_ipr"};
  for (size_t i = 0; i < vg.size(); ++i) {
    csv.rows.push_back({fmt17(vg[i]), fmt17(r.mean_ipr[i])});
  }
  write_csv(out_dir / "localization.csv", csv);

  json result;
  result["points"] = vg.size();
  result["transition_estimate"] =
      r.transition_estimate ? json(*r.transition_estimate) : json(nullptr);
  write_summary(out_dir, "localization", cfg, result);
}

void cmd_plot(const RunConfig& cfg, const std::filesystem::path& out_dir) {
  if (cfg.plot_input.empty()) {
    throw std::invalid_argument("plot_input: required for the plot command");
  }
  CsvTable table = read_csv(cfg.plot_input);

  auto column_index = [&](const std::string& name) {
    for (size_t c = 0; c < table.header.size(); ++c) {
      if (table.header[c] == name) return static_cast<int>(c);
    }
    return -1;
  };

  int xc = 0;
  if (!cfg.plot_x.empty()) {
    xc = column_index(cfg.plot_x);
    if (xc < 0) {
      throw std::runtime_error("plot_x: column '" + cfg.plot_x +
                               "' not found in input");
    }
  }

  std::vector<int> ycols;
  if (!cfg.plot_y.empty()) {
    std::stringstream ss(cfg.plot_y);
    std::string name;
    while (std::getline(ss, name, ',')) {
      int c = column_index(name);
      if (c < 0) {
        throw std::runtime_error("plot_y: column '" + name +
                                 "' not found in input");
      }
      ycols.push_back(c);
    }
  } else {
    // Default to the re/im pair when present, else the first non-x column.
    int re = column_index("re"), im = column_index("im");
    if (re >= 0 && im >= 0) {
      ycols = {re, im};
    } else {
      for (size_t c = 0; c < table.header.size(); ++c) {
        if (static_cast<int>(c) != xc) {
          ycols.push_back(static_cast<int>(c));
          break;
        }
      }
    }
  }
  if (ycols.empty()) {
    throw std::runtime_error("plot: input has no y column");
  }

  std::vector<PlotSeries> series;
  for (int yc : ycols) {
    PlotSeries s;
    s.label = table.header[yc];
    s.x.reserve(table.rows.size());
    s.y.reserve(table.rows.size());
    for (const auto& row : table.rows) {
      s.x.push_back(row[xc]);
      s.y.push_back(row[yc]);
    }
    series.push_back(std::move(s));
  }

  std::string y_label = series.size() == 1 ? series[0].label : "value";
  write_text(out_dir / "plot.svg",
             render_scatter_svg(series, cfg.plot_title, table.header[xc],
                                y_label));

  json labels = json::array();
  for (const auto& s : series) labels.push_back(s.label);
  json result;
  result["input"] = cfg.plot_input;
  result["points"] = table.rows.size();
  result["series"] = labels;
  write_summary(out_dir, "plot", cfg, result);
}

}  // namespace

void run_command(const std::string& command, const RunConfig& cfg,
                 const std::filesystem::path& out_dir, int threads) {
  std::filesystem::create_directories(out_dir);
  if (command == "spectrum") {
    cmd_spectrum(cfg, out_dir);
  } else if (command == "sweep-phi") {
    cmd_sweep_phi(cfg, out_dir, threads);
  } else if (command == "critical-gamma") {
    cmd_critical_gamma(cfg, out_dir, threads);
  } else if (command == "phase-diagram") {
    cmd_phase_diagram(cfg, out_dir, threads);
  } else if (command == "zero-modes") {
    cmd_zero_modes(cfg, out_dir);
  } else if (command == "check-pt") {
    cmd_check_pt(cfg, out_dir);
  } else if (command == "majorana") {
    cmd_majorana(cfg, out_dir);
  } else if (command == "n-scan") {
    cmd_n_scan(cfg, out_dir, threads);
  } else if (command == "localization") {
    cmd_localization(cfg, out_dir, threads);
  } else if (command == "plot") {
    cmd_plot(cfg, out_dir);
  } else {
    throw std::invalid_argument("unknown command '" + command + "'");
  }
}

std::string output_schema(const std::string& command) {
  if (command == "spectrum") {
    return "writes spectrum.csv (index,re,im,residual; index is the 1-based "
           "position in the canonical Re-then-Im eigenvalue order) and "
           "spectrum.json";
  }
  if (command == "sweep-phi") {
    return "writes sweep_phi.csv (phi,index,re,im) and sweep_phi.json "
           "(per-point max_imag, zero-mode counts, bulk gaps, transition "
           "intervals)";
  }
  if (command == "critical-gamma") {
    return "writes critical_gamma.json (gamma_c or no_breaking, bracket, "
           "iterations, policy); no CSV (scalar result)";
  }
  if (command == "phase-diagram") {
    return "writes phase_diagram.csv (gamma,phi,max_imag,zero_modes; "
           "gamma-major row order) and phase_diagram.json";
  }
  if (command == "zero-modes") {
    return "writes zero_modes.csv (index,re,im,ipr,edge_weight; accepted "
           "modes only) and zero_modes.json";
  }
  if (command == "check-pt") {
    return "writes check_pt.json (pt_symmetric, deviation); no CSV";
  }
  if (command == "majorana") {
    return "writes majorana.json (delta_plus, delta_minus, coupling_terms, "
           "touches_unpaired, z2_nontrivial); no CSV";
  }
  if (command == "n-scan") {
    return "writes n_scan.csv (n,real,worst_imag; real is 0/1 over the "
           "phi_points reality grid) and n_scan.json";
  }
  if (command == "localization") {
    return "writes localization.csv (v,mean_ipr) and localization.json "
           "(transition_estimate)";
  }
  if (command == "plot") {
    return "reads plot_input CSV and writes plot.svg (standalone SVG 1.1 "
           "scatter) and plot.json";
  }
  return "";
}

}  // namespace ptlat
