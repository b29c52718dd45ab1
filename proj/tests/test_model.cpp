#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ptlat/model.hpp"

using namespace ptlat;
using std::complex;

namespace {

// Captures the validation message so tests can assert the offending field.
template <typename F>
std::string error_of(F&& f) {
  try {
    f();
  } catch (const std::invalid_argument& e) {
    return e.what();
  }
  return "";
}

ModelSpec offdiag(int n, double lambda, double phi, double gamma, int j) {
  ModelSpec s;
  s.n = n;
  s.lambda = lambda;
  s.beta = RationalBeta{1, 2};
  s.phi = phi;
  s.impurity = {j, gamma};
  return s;
}

}  // namespace

TEST_CASE("unmodulated dimer") {
  ModelSpec s = offdiag(2, 0.0, 0.0, 0.0, 1);
  ComplexMatrix h = build_hamiltonian(s);
  CHECK(h.entry(1, 1) == complex<double>(0, 0));
  CHECK(h.entry(1, 2) == complex<double>(-1, 0));
  CHECK(h.entry(2, 1) == complex<double>(-1, 0));
  CHECK(h.entry(2, 2) == complex<double>(0, 0));
}

TEST_CASE("three-site modulated chain with edge impurities") {
  ModelSpec s = offdiag(3, 0.4, 0.0, 0.5, 1);
  ComplexMatrix h = build_hamiltonian(s);
  // cos(pi) = -1 on bond 1, cos(2 pi) = +1 on bond 2
  CHECK(h.entry(1, 2).real() == doctest::Approx(-0.6).epsilon(1e-14));
  CHECK(h.entry(2, 3).real() == doctest::Approx(-1.4).epsilon(1e-14));
  CHECK(h.entry(1, 1) == complex<double>(0, 0.5));
  CHECK(h.entry(3, 3) == complex<double>(0, -0.5));
  CHECK(h.entry(2, 2) == complex<double>(0, 0));
}

TEST_CASE("mirror placement j=2 on four sites") {
  ModelSpec s = offdiag(4, 0.0, 0.0, 0.3, 2);
  ComplexMatrix h = build_hamiltonian(s);
  CHECK(h.entry(2, 2) == complex<double>(0, 0.3));
  CHECK(h.entry(3, 3) == complex<double>(0, -0.3));
  for (int b = 1; b < 4; ++b) {
    CHECK(h.entry(b, b + 1) == complex<double>(-1, 0));
  }
  CHECK(h.entry(1, 1) == complex<double>(0, 0));
  CHECK(h.entry(4, 4) == complex<double>(0, 0));
  CHECK(h.entry(1, 3) == complex<double>(0, 0));
}

TEST_CASE("nnn term") {
  ModelSpec s = offdiag(6, 0.4, 0.7, 0.2, 2);
  ComplexMatrix base = build_hamiltonian(s);

  SUBCASE("zero amplitude reproduces the nearest-neighbor matrix") {
    ModelSpec nnn = s;
    nnn.variant = LatticeVariant::OffDiagonalAANNN;
    nnn.t_nnn = 0.0;
    ComplexMatrix h = build_hamiltonian(nnn);
    CHECK((h.mat() - base.mat()).norm() == 0.0);
  }

  SUBCASE("positive sign on the second diagonal") {
    ModelSpec nnn = offdiag(3, 0.4, 0.0, 0.0, 1);
    nnn.variant = LatticeVariant::OffDiagonalAANNN;
    nnn.t_nnn = 0.1;
    ComplexMatrix h = build_hamiltonian(nnn);
    CHECK(h.entry(1, 3) == complex<double>(0.1, 0));
    CHECK(h.entry(3, 1) == complex<double>(0.1, 0));
  }

  SUBCASE("hermitian at gamma=0") {
    ModelSpec nnn = offdiag(7, 0.4, 1.1, 0.0, 3);
    nnn.variant = LatticeVariant::OffDiagonalAANNN;
    nnn.t_nnn = -0.3;
    ComplexMatrix h = build_hamiltonian(nnn);
    CHECK((h.mat() - h.mat().adjoint()).norm() == 0.0);
  }
}

TEST_CASE("diagonal variant") {
  SUBCASE("free chain at V=0") {
    ModelSpec s;
    s.variant = LatticeVariant::DiagonalAA;
    s.n = 5;
    s.beta = 0.3;
    ComplexMatrix h = build_hamiltonian(s);
    for (int b = 1; b < 5; ++b) {
      CHECK(h.entry(b, b + 1) == complex<double>(-1, 0));
    }
    for (int n = 1; n <= 5; ++n) {
      CHECK(h.entry(n, n) == complex<double>(0, 0));
    }
  }

  SUBCASE("quasi-periodic onsite potential") {
    ModelSpec s;
    s.variant = LatticeVariant::DiagonalAA;
    s.n = 4;
    s.v = 0.4;
    s.beta = std::sqrt(13.0) - 3.0;
    ComplexMatrix h = build_hamiltonian(s);
    double expected =
        0.4 * std::cos(2.0 * std::numbers::pi * (std::sqrt(13.0) - 3.0));
    CHECK(h.entry(1, 1).real() == expected);
    CHECK(h.entry(1, 1).imag() == 0.0);
  }

  SUBCASE("centered impurity cancels") {
    ModelSpec s;
    s.variant = LatticeVariant::DiagonalAA;
    s.n = 5;
    s.v = 0.7;
    s.beta = 0.3;
    s.impurity = {3, 0.9};
    ModelSpec hermitian = s;
    hermitian.impurity.gamma = 0.0;
    CHECK((build_hamiltonian(s).mat() - build_hamiltonian(hermitian).mat())
              .norm() == 0.0);
  }
}

TEST_CASE("gamma=0 matrices are hermitian across variants") {
  for (auto variant :
       {LatticeVariant::OffDiagonalAA, LatticeVariant::OffDiagonalAANNN,
        LatticeVariant::DiagonalAA}) {
    for (int n : {2, 5, 12}) {
      ModelSpec s;
      s.variant = variant;
      s.n = n;
      s.lambda = 0.6;
      s.v = 0.8;
      s.t_nnn = 0.15;
      s.beta = RationalBeta{2, 5};
      s.phi = 1.234;
      s.impurity = {1 + n / 3, 0.0};
      ComplexMatrix h = build_hamiltonian(s);
      CHECK((h.mat() - h.mat().adjoint()).norm() == 0.0);
    }
  }
}

TEST_CASE("impurity term is the only gamma dependence") {
  ModelSpec s = offdiag(9, 0.4, 0.8, 0.0, 3);
  ComplexMatrix h0 = build_hamiltonian(s);
  s.impurity.gamma = 0.45;
  ComplexMatrix h = build_hamiltonian(s);
  Eigen::MatrixXcd diff = h.mat() - h0.mat();
  for (int r = 1; r <= 9; ++r) {
    for (int c = 1; c <= 9; ++c) {
      complex<double> expected(0, 0);
      if (r == c && r == 3) expected = complex<double>(0, 0.45);
      if (r == c && r == 7) expected = complex<double>(0, -0.45);
      CHECK(diff(r - 1, c - 1) == expected);
    }
  }
}

TEST_CASE("bond amplitudes are q-periodic for rational beta") {
  ModelSpec s;
  s.n = 40;
  s.lambda = 0.7;
  s.beta = RationalBeta{2, 5};
  s.phi = 0.31;
  for (int n = 1; n + 5 <= 39; ++n) {
    CHECK(bond_coupling(s, n) ==
          doctest::Approx(bond_coupling(s, n + 5)).epsilon(1e-12));
  }
}

TEST_CASE("trace vanishes for the off-diagonal variant") {
  for (int j : {1, 2, 10, 21}) {
    ModelSpec s = offdiag(21, 0.4, 0.5, 0.8, j);
    std::complex<double> tr = build_hamiltonian(s).mat().trace();
    CHECK(std::abs(tr) <= 1e-12 * 21);
  }
}

TEST_CASE("validation names the offending field") {
  ModelSpec good = offdiag(10, 0.4, 0.0, 0.1, 2);
  CHECK_NOTHROW(validate(good));

  ModelSpec s = good;
  s.n = 1;
  CHECK(error_of([&] { validate(s); }).substr(0, 2) == "n:");

  s = good;
  s.t = 0.0;
  CHECK(error_of([&] { validate(s); }).substr(0, 2) == "t:");

  s = good;
  s.lambda = -0.1;
  CHECK(error_of([&] { validate(s); }).substr(0, 7) == "lambda:");

  s = good;
  s.impurity.j = 0;
  CHECK(error_of([&] { validate(s); }).substr(0, 2) == "j:");
  s.impurity.j = 11;
  CHECK(error_of([&] { validate(s); }).substr(0, 2) == "j:");

  s = good;
  s.impurity.gamma = -0.2;
  CHECK(error_of([&] { validate(s); }).substr(0, 6) == "gamma:");

  s = good;
  s.beta = RationalBeta{3, 2};
  CHECK(error_of([&] { validate(s); }).substr(0, 5) == "beta:");
  s.beta = RationalBeta{2, 2};
  CHECK(error_of([&] { validate(s); }).substr(0, 5) == "beta:");
  s.beta = 1.5;
  CHECK(error_of([&] { validate(s); }).substr(0, 5) == "beta:");
  s.beta = 0.0;
  CHECK(error_of([&] { validate(s); }).substr(0, 5) == "beta:");

  s = good;
  s.phi = std::numeric_limits<double>::infinity();
  CHECK(error_of([&] { validate(s); }).substr(0, 4) == "phi:");
}

TEST_CASE("reduced rational beta keeps its value") {
  CHECK(beta_value(RationalBeta{1, 3}) == doctest::Approx(1.0 / 3.0));
  CHECK(beta_value(BetaValue{0.605551}) == 0.605551);
}
