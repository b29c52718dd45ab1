#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ptlat/analysis.hpp"
#include "ptlat/model.hpp"

namespace ptlat {

// Thresholds and scheduling shared by the sweep operations. Tolerances are
// absolute; callers scale them by t when t != 1.
struct SweepOptions {
  double eps_real = 1e-8;
  double eps_zero = 1e-3;
  double w_min = 0.5;
  double fraction = 0.1;
  int phi_points = 64;  // resolution of the implicit [0, 2pi) reality grid
  int threads = 0;      // 0 = hardware concurrency
};

struct SweepRecord {
  Eigen::VectorXcd values;  // canonical order
  double max_imag = 0.0;
  int zero_mode_count = 0;
  double bulk_gap = 0.0;
};

struct SweepResult {
  std::string axis;
  std::vector<double> grid;
  std::vector<SweepRecord> records;
  ModelSpec spec;  // template the sweep was built from
};

SweepResult sweep_phi(const ModelSpec& tmpl, const std::vector<double>& phi_grid,
                      const SweepOptions& opt = {});

struct TransitionReport {
  // Consecutive grid-point intervals bracketing each zero-mode count change.
  std::vector<std::pair<double, double>> intervals;
  // True when some record's bulk gap falls below twice its mean level
  // spacing; toggles are then not meaningful.
  bool gapless = false;
};

TransitionReport transition_phis(const SweepResult& r);

struct CriticalGammaPolicy {
  enum class Kind { AllPhi, AtFixedPhi };
  Kind kind = Kind::AllPhi;
  double phi = 0.0;  // AtFixedPhi only

  static CriticalGammaPolicy all_phi() { return {}; }
  static CriticalGammaPolicy at_phi(double phi) {
    return {Kind::AtFixedPhi, phi};
  }
};

struct CriticalGammaResult {
  std::optional<double> gamma_c;  // empty iff no_breaking
  bool no_breaking = false;       // spectrum still real at gamma_max
  double gamma_low = 0.0;
  double gamma_high = 0.0;
  double tol = 0.0;  // achieved bracket width
  CriticalGammaPolicy policy;
  int iterations = 0;
};

// Bisection of "spectrum real under policy" on [0, gamma_max]. AllPhi
// requires reality at every point of a phi_points grid over [0, 2pi).
CriticalGammaResult critical_gamma(const ModelSpec& tmpl,
                                   const CriticalGammaPolicy& policy,
                                   double gamma_max, double tol,
                                   const SweepOptions& opt = {});

struct PhaseDiagramCell {
  double max_imag = 0.0;
  int zero_mode_count = 0;
};

struct PhaseDiagramResult {
  std::vector<double> phi_grid;
  std::vector<double> gamma_grid;
  // Row-major with gamma as the row axis: cell (ig, ip) lives at
  // ig * phi_grid.size() + ip.
  std::vector<PhaseDiagramCell> cells;
  ModelSpec spec;
};

PhaseDiagramResult phase_diagram(const ModelSpec& tmpl,
                                 const std::vector<double>& phi_grid,
                                 const std::vector<double>& gamma_grid,
                                 const SweepOptions& opt = {});

struct NScanRecord {
  int n = 0;
  bool real = false;       // real at every point of the reality grid
  double worst_imag = 0.0;
};

struct NScanResult {
  std::vector<NScanRecord> records;
  double gamma_probe = 0.0;
  ModelSpec spec;
};

NScanResult n_scan(const ModelSpec& tmpl, const std::vector<int>& n_values,
                   double gamma_probe, const SweepOptions& opt = {});

struct LocalizationScanResult {
  std::vector<double> v_grid;
  std::vector<double> mean_ipr;  // over all eigenstates, per V
  // Midpoint of the steepest mean-IPR segment; empty on degenerate grids.
  std::optional<double> transition_estimate;
  ModelSpec spec;
};

LocalizationScanResult localization_scan(const ModelSpec& tmpl,
                                         const std::vector<double>& v_grid,
                                         const SweepOptions& opt = {});

}  // namespace ptlat
