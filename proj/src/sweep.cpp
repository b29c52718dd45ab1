#include "ptlat/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ptlat/eig.hpp"
#include "ptlat/parallel.hpp"

namespace ptlat {

namespace {

void validate_grid(const std::vector<double>& grid, const char* name,
                   double lo, double hi) {
  if (grid.empty()) {
    throw std::invalid_argument(std::string(name) + ": grid must be nonempty");
  }
  for (size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i]) || grid[i] < lo || grid[i] > hi) {
      throw std::invalid_argument(std::string(name) + ": values must lie in [" +
                                  std::to_string(lo) + ", " +
                                  std::to_string(hi) + "]");
    }
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw std::invalid_argument(std::string(name) +
                                  ": grid must be strictly increasing");
    }
  }
}

SweepRecord evaluate_point(const ModelSpec& spec, const SweepOptions& opt) {
  EigenSystem sys = eigendecompose(build_hamiltonian(spec));
  SweepRecord rec;
  rec.max_imag = max_imag(sys.values);
  EdgeStateReport modes =
      find_zero_modes(sys, opt.eps_zero, opt.w_min, opt.fraction);
  rec.zero_mode_count = modes.count;
  rec.bulk_gap = modes.bulk_gap;
  rec.values = std::move(sys.values);
  return rec;
}

std::vector<double> reality_grid(int phi_points) {
  std::vector<double> grid(phi_points);
  for (int k = 0; k < phi_points; ++k) {
    grid[k] = 2.0 * std::numbers::pi * k / phi_points;
  }
  return grid;
}

// Reality of the spectrum at every phi of the implicit grid; short-circuits
// once any point breaks.
bool real_under_all_phi(const ModelSpec& spec, const SweepOptions& opt) {
  auto grid = reality_grid(opt.phi_points);
  std::atomic<bool> all_real{true};
  parallel_for(static_cast<int>(grid.size()), opt.threads, [&](int k) {
    if (!all_real.load(std::memory_order_relaxed)) return;
    ModelSpec point = spec;
    point.phi = grid[k];
    EigenSystem sys = eigendecompose(build_hamiltonian(point));
    if (max_imag(sys.values) > opt.eps_real) {
      all_real.store(false, std::memory_order_relaxed);
    }
  });
  return all_real.load();
}

}  // namespace

SweepResult sweep_phi(const ModelSpec& tmpl, const std::vector<double>& phi_grid,
                      const SweepOptions& opt) {
  validate_grid(phi_grid, "phi_grid", 0.0, 2.0 * std::numbers::pi);
  validate(tmpl);

  SweepResult result;
  result.axis = "phi";
  result.grid = phi_grid;
  result.spec = tmpl;
  result.records.resize(phi_grid.size());
  parallel_for(static_cast<int>(phi_grid.size()), opt.threads, [&](int i) {
    ModelSpec spec = tmpl;
    spec.phi = phi_grid[i];
    try {
      result.records[i] = evaluate_point(spec, opt);
    } catch (const std::runtime_error& e) {
      std::ostringstream msg;
      msg << "sweep_phi: at phi=" << phi_grid[i] << ": " << e.what();
      throw std::runtime_error(msg.str());
    }
  });
  return result;
}

TransitionReport transition_phis(const SweepResult& r) {
  TransitionReport report;
  // A sweep counts as gapless only when every record sits at or below twice
  // its mean level spacing; isolated closings (the transition points
  // themselves) must not suppress the toggles around them.
  report.gapless = !r.records.empty();
  for (const auto& rec : r.records) {
    const int n = static_cast<int>(rec.values.size());
    if (n < 2) {
      report.gapless = false;
      break;
    }
    double spacing =
        (rec.values(n - 1).real() - rec.values(0).real()) / (n - 1);
    if (rec.bulk_gap > 2.0 * spacing) {
      report.gapless = false;
      break;
    }
  }
  for (size_t i = 0; i + 1 < r.records.size(); ++i) {
    if (r.records[i].zero_mode_count != r.records[i + 1].zero_mode_count) {
      report.intervals.emplace_back(r.grid[i], r.grid[i + 1]);
    }
  }
  return report;
}

CriticalGammaResult critical_gamma(const ModelSpec& tmpl,
                                   const CriticalGammaPolicy& policy,
                                   double gamma_max, double tol,
                                   const SweepOptions& opt) {
  if (!(gamma_max > 0.0)) {
    throw std::invalid_argument("gamma_max: must be positive");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("tol: must be positive");
  }
  validate(tmpl);

  auto predicate = [&](double gamma) {
    ModelSpec spec = tmpl;
    spec.impurity.gamma = gamma;
    if (policy.kind == CriticalGammaPolicy::Kind::AtFixedPhi) {
      spec.phi = policy.phi;
      EigenSystem sys = eigendecompose(build_hamiltonian(spec));
      return max_imag(sys.values) <= opt.eps_real;
    }
    return real_under_all_phi(spec, opt);
  };

  CriticalGammaResult result;
  result.policy = policy;

  // Breaking at infinitesimal gamma shows up already at the tol scale.
  if (!predicate(tol)) {
    result.gamma_c = 0.0;
    result.gamma_low = 0.0;
    result.gamma_high = tol;
    result.tol = tol;
    return result;
  }
  if (predicate(gamma_max)) {
    result.no_breaking = true;
    result.gamma_low = gamma_max;
    result.gamma_high = gamma_max;
    result.tol = 0.0;
    return result;
  }

  double lo = tol;        // verified real
  double hi = gamma_max;  // verified broken
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (predicate(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++result.iterations;
  }
  result.gamma_c = 0.5 * (lo + hi);
  result.gamma_low = lo;
  result.gamma_high = hi;
  result.tol = hi - lo;
  return result;
}

PhaseDiagramResult phase_diagram(const ModelSpec& tmpl,
                                 const std::vector<double>& phi_grid,
                                 const std::vector<double>& gamma_grid,
                                 const SweepOptions& opt) {
  validate_grid(phi_grid, "phi_grid", 0.0, 2.0 * std::numbers::pi);
  validate_grid(gamma_grid, "gamma_grid", 0.0,
                std::numeric_limits<double>::infinity());
  validate(tmpl);

  PhaseDiagramResult result;
  result.phi_grid = phi_grid;
  result.gamma_grid = gamma_grid;
  result.spec = tmpl;
  const int np = static_cast<int>(phi_grid.size());
  const int ng = static_cast<int>(gamma_grid.size());
  result.cells.resize(static_cast<size_t>(np) * ng);
  parallel_for(np * ng, opt.threads, [&](int idx) {
    const int ig = idx / np;
    const int ip = idx % np;
    ModelSpec spec = tmpl;
    spec.phi = phi_grid[ip];
    spec.impurity.gamma = gamma_grid[ig];
    try {
      SweepRecord rec = evaluate_point(spec, opt);
      result.cells[idx] = {rec.max_imag, rec.zero_mode_count};
    } catch (const std::runtime_error& e) {
      std::ostringstream msg;
      msg << "phase_diagram: at phi=" << phi_grid[ip]
          << ", gamma=" << gamma_grid[ig] << ": " << e.what();
      throw std::runtime_error(msg.str());
    }
  });
  return result;
}

NScanResult n_scan(const ModelSpec& tmpl, const std::vector<int>& n_values,
                   double gamma_probe, const SweepOptions& opt) {
  if (n_values.empty()) {
    throw std::invalid_argument("n_values: must be nonempty");
  }
  if (gamma_probe < 0.0 || !std::isfinite(gamma_probe)) {
    throw std::invalid_argument("gamma_probe: must be nonnegative and finite");
  }

  NScanResult result;
  result.gamma_probe = gamma_probe;
  result.spec = tmpl;
  result.records.resize(n_values.size());

  auto grid = reality_grid(opt.phi_points);
  const int np = static_cast<int>(grid.size());
  const int count = static_cast<int>(n_values.size()) * np;
  std::vector<double> imag_slots(count, 0.0);
  parallel_for(count, opt.threads, [&](int idx) {
    ModelSpec spec = tmpl;
    spec.n = n_values[idx / np];
    spec.impurity.gamma = gamma_probe;
    spec.phi = grid[idx % np];
    EigenSystem sys = eigendecompose(build_hamiltonian(spec));
    imag_slots[idx] = max_imag(sys.values);
  });
  for (size_t i = 0; i < n_values.size(); ++i) {
    double worst = 0.0;
    for (int k = 0; k < np; ++k) {
      worst = std::max(worst, imag_slots[i * np + k]);
    }
    result.records[i] = {n_values[i], worst <= opt.eps_real, worst};
  }
  return result;
}

LocalizationScanResult localization_scan(const ModelSpec& tmpl,
                                         const std::vector<double>& v_grid,
                                         const SweepOptions& opt) {
  if (tmpl.variant != LatticeVariant::DiagonalAA) {
    throw std::invalid_argument(
        "localization_scan: requires the diagonal variant");
  }
  validate_grid(v_grid, "v_grid", 0.0, std::numeric_limits<double>::infinity());
  validate(tmpl);

  LocalizationScanResult result;
  result.v_grid = v_grid;
  result.spec = tmpl;
  result.mean_ipr.resize(v_grid.size());
  parallel_for(static_cast<int>(v_grid.size()), opt.threads, [&](int i) {
    ModelSpec spec = tmpl;
    spec.v = v_grid[i];
    EigenSystem sys = eigendecompose(build_hamiltonian(spec));
    double sum = 0.0;
    for (int k = 0; k < spec.n; ++k) sum += ipr(sys.vectors.col(k));
    result.mean_ipr[i] = sum / spec.n;
  });

  if (v_grid.size() >= 2) {
    double best = -std::numeric_limits<double>::infinity();
    size_t arg = 0;
    for (size_t i = 0; i + 1 < v_grid.size(); ++i) {
      double slope = (result.mean_ipr[i + 1] - result.mean_ipr[i]) /
                     (v_grid[i + 1] - v_grid[i]);
      if (slope > best) {
        best = slope;
        arg = i;
      }
    }
    result.transition_estimate = 0.5 * (v_grid[arg] + v_grid[arg + 1]);
  }
  return result;
}

}  // namespace ptlat
