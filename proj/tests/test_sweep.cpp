#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "ptlat/analysis.hpp"
#include "ptlat/eig.hpp"
#include "ptlat/model.hpp"
#include "ptlat/sweep.hpp"

using namespace ptlat;

namespace {

constexpr double kPi = std::numbers::pi;

ModelSpec ssh(int n, double gamma = 0.0, int j = 2, double lambda = 0.4) {
  ModelSpec s;
  s.n = n;
  s.lambda = lambda;
  s.beta = RationalBeta{1, 2};
  s.impurity = {j, gamma};
  return s;
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> g(count);
  for (int i = 0; i < count; ++i) {
    g[i] = lo + (hi - lo) * i / (count - 1);
  }
  g.back() = hi;
  return g;
}

std::vector<double> six_points() {
  std::vector<double> g(6);
  for (int k = 0; k < 6; ++k) g[k] = k * kPi / 3.0;
  return g;
}

template <typename F>
std::string error_of(F&& f) {
  try {
    f();
  } catch (const std::invalid_argument& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("sweep_phi basics") {
  std::vector<double> grid = linspace(0.0, 2 * kPi, 21);
  SweepResult r = sweep_phi(ssh(12), grid);
  CHECK(r.axis == "phi");
  REQUIRE(r.records.size() == 21);
  REQUIRE(r.grid.size() == 21);
  for (const auto& rec : r.records) {
    REQUIRE(rec.values.size() == 12);
    CHECK(rec.max_imag <= 1e-12);
  }

  SUBCASE("grid validation") {
    CHECK(error_of([&] { sweep_phi(ssh(4), {}); }).substr(0, 9) == "phi_grid:");
    CHECK(error_of([&] { sweep_phi(ssh(4), {0.0, 7.0}); }).substr(0, 9) ==
          "phi_grid:");
    CHECK(error_of([&] { sweep_phi(ssh(4), {1.0, 1.0}); }).substr(0, 9) ==
          "phi_grid:");
    CHECK(error_of([&] { sweep_phi(ssh(4), {2.0, 1.0}); }).substr(0, 9) ==
          "phi_grid:");
  }

  SUBCASE("thread count does not change the numbers") {
    SweepOptions one;
    one.threads = 1;
    SweepOptions four;
    four.threads = 4;
    SweepResult a = sweep_phi(ssh(20, 0.3, 2), grid, one);
    SweepResult b = sweep_phi(ssh(20, 0.3, 2), grid, four);
    for (int i = 0; i < 21; ++i) {
      CHECK(a.records[i].values == b.records[i].values);
      CHECK(a.records[i].max_imag == b.records[i].max_imag);
      CHECK(a.records[i].zero_mode_count == b.records[i].zero_mode_count);
    }
  }
}

TEST_CASE("bulk gap profile over phi") {
  SweepResult r = sweep_phi(ssh(50), linspace(0.0, 2 * kPi, 201));
  double max_gap = 0.0;
  size_t argmin = 0;
  double min_gap = 1e9;
  for (size_t i = 0; i < r.records.size(); ++i) {
    max_gap = std::max(max_gap, r.records[i].bulk_gap);
    if (r.records[i].bulk_gap < min_gap) {
      min_gap = r.records[i].bulk_gap;
      argmin = i;
    }
  }
  // widest at phi=0, pinches near the band-inversion points pi/2, 3pi/2
  CHECK(r.records[0].bulk_gap >= max_gap - 1e-12);
  double phi_min = r.grid[argmin];
  double dist = std::min(std::abs(phi_min - kPi / 2),
                         std::abs(phi_min - 3 * kPi / 2));
  CHECK(dist < 0.35);
}

TEST_CASE("transition_phis") {
  SUBCASE("even chain, fine grid") {
    SweepResult r = sweep_phi(ssh(50), linspace(0.0, 2 * kPi, 201));
    TransitionReport t = transition_phis(r);
    CHECK_FALSE(t.gapless);
    // the w_min = 0.5 gate moves the toggles ~0.3 rad inward from pi/2 and
    // 3pi/2: the hybridized pair loses edge weight well before the bulk
    // closing on a 50-site chain
    REQUIRE(t.intervals.size() == 2);
    CHECK(t.intervals[0].first == doctest::Approx(1.2566370614359172).epsilon(1e-9));
    CHECK(t.intervals[0].second == doctest::Approx(1.2880529879718151).epsilon(1e-9));
    CHECK(t.intervals[1].first == doctest::Approx(4.995132319842062).epsilon(1e-9));
    CHECK(t.intervals[1].second == doctest::Approx(5.026548245743669).epsilon(1e-9));
  }
  SUBCASE("odd chain, fine grid") {
    SweepResult r = sweep_phi(ssh(49), linspace(0.0, 2 * kPi, 201));
    TransitionReport t = transition_phis(r);
    CHECK_FALSE(t.gapless);
    // the single mode on an odd chain briefly fails the 0.5 edge-weight gate
    // while migrating between ends, producing two dips
    REQUIRE(t.intervals.size() == 4);
    CHECK(t.intervals[0].first == doctest::Approx(1.4137).epsilon(1e-3));
    CHECK(t.intervals[1].second == doctest::Approx(1.7279).epsilon(1e-3));
    CHECK(t.intervals[2].first == doctest::Approx(4.5553).epsilon(1e-3));
    CHECK(t.intervals[3].second == doctest::Approx(4.8695).epsilon(1e-3));
  }
  SUBCASE("even chain, coarse grid with a strict gate") {
    SweepOptions opt;
    opt.w_min = 0.9;
    SweepResult r = sweep_phi(ssh(50), six_points(), opt);
    std::vector<int> counts;
    for (const auto& rec : r.records) counts.push_back(rec.zero_mode_count);
    CHECK(counts == std::vector<int>{2, 2, 0, 0, 0, 2});
    TransitionReport t = transition_phis(r);
    CHECK_FALSE(t.gapless);
    REQUIRE(t.intervals.size() == 2);
    CHECK(t.intervals[0].first < kPi / 2);
    CHECK(t.intervals[0].second > kPi / 2);
    CHECK(t.intervals[1].first < 3 * kPi / 2);
    CHECK(t.intervals[1].second > 3 * kPi / 2);
  }
  SUBCASE("odd chain never toggles") {
    SweepOptions opt;
    opt.w_min = 0.9;
    SweepResult r = sweep_phi(ssh(49), six_points(), opt);
    for (const auto& rec : r.records) CHECK(rec.zero_mode_count == 1);
    TransitionReport t = transition_phis(r);
    CHECK(t.intervals.empty());
    CHECK_FALSE(t.gapless);
  }
  SUBCASE("uniform chain is flagged gapless") {
    SweepResult r = sweep_phi(ssh(50, 0.0, 2, 0.0), linspace(0.0, 2 * kPi, 5));
    TransitionReport t = transition_phis(r);
    CHECK(t.gapless);
    CHECK(t.intervals.empty());
  }
}

TEST_CASE("critical_gamma") {
  SUBCASE("detuned dimer breaks exactly at gamma = t") {
    ModelSpec dimer = ssh(2, 0.0, 1, 0.0);
    CriticalGammaResult r = critical_gamma(dimer, CriticalGammaPolicy::at_phi(0.0),
                                           2.0, 1e-4);
    REQUIRE(r.gamma_c.has_value());
    CHECK_FALSE(r.no_breaking);
    CHECK(*r.gamma_c == doctest::Approx(1.0).epsilon(2e-4));
    CHECK(r.gamma_low < *r.gamma_c);
    CHECK(r.gamma_high > *r.gamma_c);
    CHECK(r.tol <= 1e-4);
    CHECK(r.iterations > 0);

    // the bracket is live: real below, broken above
    ModelSpec low = dimer;
    low.impurity.gamma = r.gamma_low;
    CHECK(is_spectrum_real(eigendecompose(build_hamiltonian(low)), 1e-8));
    ModelSpec high = dimer;
    high.impurity.gamma = r.gamma_high;
    CHECK_FALSE(is_spectrum_real(eigendecompose(build_hamiltonian(high)), 1e-8));
  }
  SUBCASE("no breaking below gamma_max") {
    CriticalGammaResult r = critical_gamma(ssh(2, 0.0, 1, 0.0),
                                           CriticalGammaPolicy::at_phi(0.0),
                                           0.5, 1e-4);
    CHECK(r.no_breaking);
    CHECK_FALSE(r.gamma_c.has_value());
    CHECK(r.gamma_low == 0.5);
    CHECK(r.gamma_high == 0.5);
  }
  SUBCASE("decoupled end site breaks immediately") {
    // lambda = 1 zeroes the odd bonds at phi = 0; site 1 carries +i gamma
    // alone, so any probe amplitude is already broken
    CriticalGammaResult r = critical_gamma(ssh(4, 0.0, 1, 1.0),
                                           CriticalGammaPolicy::at_phi(0.0),
                                           1.0, 1e-4);
    REQUIRE(r.gamma_c.has_value());
    CHECK(*r.gamma_c == 0.0);
    CHECK(r.gamma_low == 0.0);
    CHECK(r.gamma_high == 1e-4);
  }
  SUBCASE("near-critical modulation leaves almost no window") {
    CriticalGammaResult r = critical_gamma(ssh(50, 0.0, 2, 1.2),
                                           CriticalGammaPolicy::all_phi(),
                                           2.0, 1e-3);
    REQUIRE(r.gamma_c.has_value());
    CHECK(*r.gamma_c <= 0.02);
  }
  SUBCASE("three-band chain") {
    ModelSpec s = ssh(50, 0.0, 3);
    s.beta = RationalBeta{1, 3};
    CriticalGammaResult r =
        critical_gamma(s, CriticalGammaPolicy::all_phi(), 2.0, 1e-3);
    REQUIRE(r.gamma_c.has_value());
    CHECK(*r.gamma_c == doctest::Approx(0.30).epsilon(0.1));
  }
  SUBCASE("threshold drops as the impurity moves inward") {
    CriticalGammaResult j2 = critical_gamma(ssh(50, 0.0, 2),
                                            CriticalGammaPolicy::all_phi(),
                                            2.0, 1e-3);
    CriticalGammaResult j4 = critical_gamma(ssh(50, 0.0, 4),
                                            CriticalGammaPolicy::all_phi(),
                                            2.0, 1e-3);
    REQUIRE(j2.gamma_c.has_value());
    REQUIRE(j4.gamma_c.has_value());
    CHECK(*j2.gamma_c == doctest::Approx(0.5515).epsilon(0.05));
    CHECK(*j4.gamma_c == doctest::Approx(0.3217).epsilon(0.05));
    CHECK(*j4.gamma_c < *j2.gamma_c - 0.1);
  }
  SUBCASE("argument validation") {
    CHECK(error_of([&] {
            critical_gamma(ssh(4), CriticalGammaPolicy::all_phi(), 0.0, 1e-4);
          }).substr(0, 10) == "gamma_max:");
    CHECK(error_of([&] {
            critical_gamma(ssh(4), CriticalGammaPolicy::all_phi(), 1.0, 0.0);
          }).substr(0, 4) == "tol:");
  }
}

TEST_CASE("phase_diagram") {
  std::vector<double> phis = linspace(0.0, 2 * kPi, 5);
  std::vector<double> gammas = {0.0, 0.25, 0.5};
  PhaseDiagramResult r = phase_diagram(ssh(10), phis, gammas);
  REQUIRE(r.cells.size() == 15);
  CHECK(r.phi_grid == phis);
  CHECK(r.gamma_grid == gammas);
  for (int ip = 0; ip < 5; ++ip) {
    CHECK(r.cells[0 * 5 + ip].max_imag <= 1e-12);
  }
  // gamma rows are contiguous: cell (ig, ip) at ig * n_phi + ip
  ModelSpec probe = ssh(10, 0.5, 2);
  probe.phi = phis[3];
  double direct = max_imag(eigendecompose(build_hamiltonian(probe)));
  CHECK(r.cells[2 * 5 + 3].max_imag == direct);

  SUBCASE("thread count does not change the numbers") {
    SweepOptions one;
    one.threads = 1;
    SweepOptions four;
    four.threads = 4;
    PhaseDiagramResult a = phase_diagram(ssh(10), phis, gammas, one);
    PhaseDiagramResult b = phase_diagram(ssh(10), phis, gammas, four);
    for (size_t i = 0; i < a.cells.size(); ++i) {
      CHECK(a.cells[i].max_imag == b.cells[i].max_imag);
      CHECK(a.cells[i].zero_mode_count == b.cells[i].zero_mode_count);
    }
  }
  SUBCASE("every cell below the critical degree stays real") {
    PhaseDiagramResult r = phase_diagram(ssh(50), phis, gammas);
    for (const auto& cell : r.cells) {
      CHECK(cell.max_imag <= 1e-8);
    }
  }
}

TEST_CASE("n_scan") {
  ModelSpec s = ssh(50, 0.0, 3);
  s.beta = RationalBeta{1, 3};
  NScanResult r = n_scan(s, {48, 49, 50}, 0.1);
  REQUIRE(r.records.size() == 3);
  CHECK(r.records[0].n == 48);
  CHECK_FALSE(r.records[0].real);
  CHECK(r.records[0].worst_imag > 1e-8);
  CHECK_FALSE(r.records[1].real);
  CHECK(r.records[1].worst_imag > 1e-8);
  CHECK(r.records[2].real);
  CHECK(r.records[2].worst_imag <= 1e-8);

  SUBCASE("hermitian probe is always real") {
    NScanResult h = n_scan(ssh(10), {8, 9, 10}, 0.0);
    for (const auto& rec : h.records) {
      CHECK(rec.real);
      CHECK(rec.worst_imag <= 1e-12);
    }
  }
  SUBCASE("validation") {
    CHECK(error_of([&] { n_scan(s, {}, 0.1); }).substr(0, 9) == "n_values:");
    CHECK(error_of([&] { n_scan(s, {8}, -0.1); }).substr(0, 12) ==
          "gamma_probe:");
  }
}

TEST_CASE("localization_scan") {
  ModelSpec s;
  s.variant = LatticeVariant::DiagonalAA;
  s.n = 30;
  s.beta = (std::sqrt(5.0) - 1.0) / 2.0;
  LocalizationScanResult r = localization_scan(s, linspace(0.0, 4.0, 9));
  REQUIRE(r.mean_ipr.size() == 9);
  REQUIRE(r.transition_estimate.has_value());
  CHECK(*r.transition_estimate == doctest::Approx(2.25).epsilon(1e-12));
  CHECK(r.mean_ipr.front() == doctest::Approx(0.048387).epsilon(1e-4));
  CHECK(r.mean_ipr.front() < 2.0 / 30.0);
  CHECK(r.mean_ipr.back() > 0.4);

  SUBCASE("single point gives no estimate") {
    LocalizationScanResult one = localization_scan(s, {1.0});
    CHECK_FALSE(one.transition_estimate.has_value());
  }
  SUBCASE("requires the diagonal variant") {
    CHECK_THROWS_AS(localization_scan(ssh(10), {0.0, 1.0}),
                    std::invalid_argument);
  }
}
