#include "ptlat/model.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ptlat {

double beta_value(const BetaValue& beta) {
  if (const auto* r = std::get_if<RationalBeta>(&beta)) {
    return static_cast<double>(r->num) / static_cast<double>(r->den);
  }
  return std::get<double>(beta);
}

void validate(const ModelSpec& spec) {
  if (spec.n < 2) {
    throw std::invalid_argument("n: must be at least 2, got " +
                                std::to_string(spec.n));
  }
  if (!(spec.t > 0.0) || !std::isfinite(spec.t)) {
    throw std::invalid_argument("t: must be positive and finite");
  }
  if (spec.lambda < 0.0 || !std::isfinite(spec.lambda)) {
    throw std::invalid_argument("lambda: must be nonnegative and finite");
  }
  if (const auto* r = std::get_if<RationalBeta>(&spec.beta)) {
    if (r->den < 1 || r->num < 1) {
      throw std::invalid_argument("beta: rational form requires positive numerator and denominator");
    }
    long g = std::gcd(r->num, r->den);
    if (r->den / g < 2) {
      throw std::invalid_argument("beta: must lie strictly between 0 and 1");
    }
    if (r->num >= r->den) {
      throw std::invalid_argument("beta: must lie strictly between 0 and 1");
    }
  } else {
    double b = std::get<double>(spec.beta);
    if (!std::isfinite(b) || b <= 0.0 || b >= 1.0) {
      throw std::invalid_argument("beta: must lie strictly between 0 and 1");
    }
  }
  if (!std::isfinite(spec.phi)) {
    throw std::invalid_argument("phi: must be finite");
  }
  if (spec.impurity.j < 1 || spec.impurity.j > spec.n) {
    throw std::invalid_argument("j: must be in [1, N], got " +
                                std::to_string(spec.impurity.j));
  }
  if (spec.impurity.gamma < 0.0 || !std::isfinite(spec.impurity.gamma)) {
    throw std::invalid_argument("gamma: must be nonnegative and finite");
  }
  if (!std::isfinite(spec.t_nnn)) {
    throw std::invalid_argument("t_nnn: must be finite");
  }
  if (!std::isfinite(spec.v)) {
    throw std::invalid_argument("v: must be finite");
  }
}

double bond_coupling(const ModelSpec& spec, int bond) {
  double b = beta_value(spec.beta);
  double arg = 2.0 * std::numbers::pi * b * static_cast<double>(bond) + spec.phi;
  return -spec.t * (1.0 + spec.lambda * std::cos(arg));
}

double onsite_potential(const ModelSpec& spec, int site) {
  double b = beta_value(spec.beta);
  double arg = 2.0 * std::numbers::pi * b * static_cast<double>(site) + spec.phi;
  return spec.v * std::cos(arg);
}

ComplexMatrix build_hamiltonian(const ModelSpec& spec) {
  validate(spec);
  const int n = spec.n;
  ComplexMatrix h(n);

  if (spec.variant == LatticeVariant::DiagonalAA) {
    for (int site = 1; site <= n; ++site) {
      h.entry(site, site) = onsite_potential(spec, site);
    }
    for (int bond = 1; bond < n; ++bond) {
      h.entry(bond, bond + 1) = -spec.t;
      h.entry(bond + 1, bond) = -spec.t;
    }
  } else {
    for (int bond = 1; bond < n; ++bond) {
      double c = bond_coupling(spec, bond);
      h.entry(bond, bond + 1) = c;
      h.entry(bond + 1, bond) = c;
    }
    if (spec.variant == LatticeVariant::OffDiagonalAANNN) {
      for (int site = 1; site + 2 <= n; ++site) {
        h.entry(site, site + 2) = spec.t_nnn;
        h.entry(site + 2, site) = spec.t_nnn;
      }
    }
  }

  // Balanced gain/loss pair; for odd N with j at the center the two terms
  // land on the same site and cancel.
  const std::complex<double> ig(0.0, spec.impurity.gamma);
  h.entry(spec.impurity.j, spec.impurity.j) += ig;
  int mirror = n - spec.impurity.j + 1;
  h.entry(mirror, mirror) -= ig;

  return h;
}

}  // namespace ptlat
