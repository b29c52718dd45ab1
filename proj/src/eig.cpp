#include "ptlat/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ptlat {

namespace {

bool canonical_less(const std::complex<double>& a, const std::complex<double>& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

EigenSystem eigendecompose(const ComplexMatrix& h) {
  const int n = h.size();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(h.mat(), true);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error(
        "eigendecompose: QR iteration did not converge for " +
        std::to_string(n) + "x" + std::to_string(n) + " matrix within " +
        std::to_string(30 * n) + " sweeps");
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return canonical_less(solver.eigenvalues()(a), solver.eigenvalues()(b));
  });

  EigenSystem sys;
  sys.values.resize(n);
  sys.vectors.resize(n, n);
  sys.residuals.resize(n);
  for (int k = 0; k < n; ++k) {
    sys.values(k) = solver.eigenvalues()(order[k]);
    Eigen::VectorXcd v = solver.eigenvectors().col(order[k]);
    v /= v.norm();
    sys.vectors.col(k) = v;
    sys.residuals(k) = (h.mat() * v - sys.values(k) * v).norm();
  }
  return sys;
}

std::vector<std::complex<double>> charpoly_coeffs(const ComplexMatrix& h) {
  const int n = h.size();
  const Eigen::MatrixXcd& a = h.mat();
  std::vector<std::complex<double>> c(n + 1);
  c[0] = 1.0;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 1; k <= n; ++k) {
    m = a * m + c[k - 1] * Eigen::MatrixXcd::Identity(n, n);
    c[k] = -(a * m).trace() / static_cast<double>(k);
  }
  return c;
}

std::vector<std::complex<double>> charpoly_roots(const ComplexMatrix& h) {
  const int n = h.size();
  if (n > 8) {
    throw std::invalid_argument("charpoly_roots: supported only for N <= 8, got " +
                                std::to_string(n));
  }
  auto c = charpoly_coeffs(h);

  auto eval = [&](std::complex<double> z) {
    std::complex<double> p = c[0];
    for (int k = 1; k <= n; ++k) p = p * z + c[k];
    return p;
  };
  // Evaluation-noise bound sum_k |c_k| |z|^(n-k); once |p(z)| sinks below
  // it the root is as converged as double arithmetic allows (multiple
  // roots never push the step below a fixed threshold).
  auto noise_floor = [&](std::complex<double> z) {
    double az = std::abs(z);
    double b = std::abs(c[0]);
    for (int k = 1; k <= n; ++k) b = b * az + std::abs(c[k]);
    return 1e-14 * b;
  };

  // Cauchy bound keeps every root inside the start circle; the angular
  // offset breaks the symmetry of spectra that come in +/- pairs.
  double radius = 0.0;
  for (int k = 1; k <= n; ++k) radius = std::max(radius, std::abs(c[k]));
  radius += 1.0;
  std::vector<std::complex<double>> z(n);
  for (int k = 0; k < n; ++k) {
    double ang = 2.0 * std::numbers::pi * k / n + 0.4;
    z[k] = radius * std::complex<double>(std::cos(ang), std::sin(ang));
  }

  const double tol = 1e-13 * radius;
  const int max_iter = 500;
  bool converged = false;
  for (int iter = 0; iter < max_iter && !converged; ++iter) {
    double step = 0.0;
    bool settled = true;
    for (int i = 0; i < n; ++i) {
      std::complex<double> p = eval(z[i]);
      if (std::abs(p) > noise_floor(z[i])) settled = false;
      std::complex<double> denom = 1.0;
      for (int k = 0; k < n; ++k) {
        if (k != i) denom *= z[i] - z[k];
      }
      std::complex<double> d = p / denom;
      z[i] -= d;
      step = std::max(step, std::abs(d));
    }
    converged = settled || step < tol;
  }
  if (!converged) {
    throw std::runtime_error(
        "charpoly_roots: Durand-Kerner did not converge within " +
        std::to_string(max_iter) + " iterations");
  }

  std::sort(z.begin(), z.end(), canonical_less);
  return z;
}

}  // namespace ptlat
