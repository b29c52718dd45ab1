#include "ptlat/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ptlat {

double max_imag(const Eigen::VectorXcd& values) {
  double m = 0.0;
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    m = std::max(m, std::abs(values(k).imag()));
  }
  return m;
}

bool is_spectrum_real(const Eigen::VectorXcd& values, double eps_real) {
  return max_imag(values) <= eps_real;
}

double ipr(const Eigen::VectorXcd& v) {
  double s = 0.0;
  for (Eigen::Index n = 0; n < v.size(); ++n) {
    double p = std::norm(v(n));
    s += p * p;
  }
  return s;
}

double edge_weight(const Eigen::VectorXcd& v, double fraction) {
  if (!(fraction > 0.0) || fraction > 0.5) {
    throw std::invalid_argument("fraction: must be in (0, 0.5]");
  }
  const int n = static_cast<int>(v.size());
  const int m = static_cast<int>(std::ceil(fraction * n));
  double w = 0.0;
  for (int k = 0; k < n; ++k) {
    if (k < m || k >= n - m) w += std::norm(v(k));
  }
  return w;
}

EdgeStateReport find_zero_modes(const EigenSystem& s, double eps_zero,
                                double w_min, double fraction) {
  if (!(eps_zero > 0.0)) {
    throw std::invalid_argument("eps_zero: must be positive");
  }
  if (!(w_min > 0.0)) {
    throw std::invalid_argument("w_min: must be positive");
  }
  if (!(fraction > 0.0) || fraction > 0.5) {
    throw std::invalid_argument("fraction: must be in (0, 0.5]");
  }

  EdgeStateReport report;
  report.eps_zero = eps_zero;
  report.w_min = w_min;
  report.fraction = fraction;

  const int n = static_cast<int>(s.values.size());
  double gap = std::numeric_limits<double>::infinity();
  for (int k = 0; k < n; ++k) {
    bool listed = false;
    if (std::abs(s.values(k).real()) <= eps_zero) {
      double w = edge_weight(s.vectors.col(k), fraction);
      if (w >= w_min) {
        report.zero_modes.push_back(
            {k, s.values(k), ipr(s.vectors.col(k)), w});
        listed = true;
      }
    }
    if (!listed) gap = std::min(gap, std::abs(s.values(k).real()));
  }
  report.count = static_cast<int>(report.zero_modes.size());
  report.bulk_gap = std::isfinite(gap) ? gap : 0.0;
  return report;
}

double pt_deviation(const ComplexMatrix& h) {
  const int n = h.size();
  double dev = 0.0;
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      std::complex<double> mirrored = std::conj(h.entry(n + 1 - r, n + 1 - c));
      dev = std::max(dev, std::abs(mirrored - h.entry(r, c)));
    }
  }
  return dev;
}

bool check_pt(const ComplexMatrix& h, double eps) {
  if (eps <= 0.0) eps = 1e-12 * h.mat().norm();
  return pt_deviation(h) <= eps;
}

MajoranaForm majorana_form(const ModelSpec& spec) {
  validate(spec);
  const auto* r = std::get_if<RationalBeta>(&spec.beta);
  if (r == nullptr || r->num * 2 != r->den) {
    throw std::invalid_argument(
        "majorana_form: requires rational beta = 1/2 (two-band case)");
  }
  if (spec.variant != LatticeVariant::OffDiagonalAA) {
    throw std::invalid_argument(
        "majorana_form: requires the nearest-neighbor off-diagonal variant");
  }

  MajoranaForm form;
  const std::complex<double> i2t(0.0, -2.0 * spec.t);
  form.delta_plus = i2t * (1.0 + std::cos(spec.phi));
  form.delta_minus = i2t * (1.0 - std::cos(spec.phi));
  form.z2_nontrivial = std::abs(form.delta_plus) > std::abs(form.delta_minus);

  // i*gamma(a+_j a_j - a+_m a_m) reduces to sigma_j tau_j bilinears; the
  // gain site enters with + and the loss site with -. A centered impurity
  // (j = m) cancels and leaves no coupling at all.
  const int j = spec.impurity.j;
  const int m = spec.n - j + 1;
  if (spec.impurity.gamma > 0.0 && j != m) {
    form.coupling_terms.push_back({j, +1});
    form.coupling_terms.push_back({m, -1});
  }
  for (const auto& term : form.coupling_terms) {
    if (term.site == 1 || term.site == spec.n) form.touches_unpaired = true;
  }
  return form;
}

}  // namespace ptlat
