#pragma once

#include <complex>
#include <vector>

#include "ptlat/eig.hpp"
#include "ptlat/model.hpp"

namespace ptlat {

double max_imag(const Eigen::VectorXcd& values);
inline double max_imag(const EigenSystem& s) { return max_imag(s.values); }

bool is_spectrum_real(const Eigen::VectorXcd& values, double eps_real);
inline bool is_spectrum_real(const EigenSystem& s, double eps_real) {
  return is_spectrum_real(s.values, eps_real);
}

// Inverse participation ratio sum |v_n|^4 of a unit-norm vector.
double ipr(const Eigen::VectorXcd& v);

// Probability weight on the outer ceil(fraction*N) sites at each end.
// Overlapping windows on short chains count each site once.
double edge_weight(const Eigen::VectorXcd& v, double fraction);

struct ZeroMode {
  int index = 0;  // position in the canonical eigenvalue order
  std::complex<double> energy;
  double ipr = 0.0;
  double edge_weight = 0.0;
};

struct EdgeStateReport {
  std::vector<ZeroMode> zero_modes;
  int count = 0;
  double bulk_gap = 0.0;  // min |Re E| over states not listed; 0 if none remain
  double eps_zero = 0.0;
  double w_min = 0.0;
  double fraction = 0.0;
};

// Gates: |Re E| <= eps_zero and edge_weight >= w_min.
EdgeStateReport find_zero_modes(const EigenSystem& s, double eps_zero,
                                double w_min, double fraction);

// Largest entry of P conj(H) P - H where P reverses the site order.
double pt_deviation(const ComplexMatrix& h);

// True iff H is invariant under combined site reversal and complex
// conjugation. eps <= 0 selects the default 1e-12 * ||H||_F.
bool check_pt(const ComplexMatrix& h, double eps = -1.0);

// One impurity bilinear sign * sigma_site tau_site (both Majorana species
// sit on the same site; the sign tracks gain vs loss).
struct MajoranaBilinear {
  int site = 0;
  int sign = 0;
};

struct MajoranaForm {
  std::complex<double> delta_plus;
  std::complex<double> delta_minus;
  std::vector<MajoranaBilinear> coupling_terms;
  bool touches_unpaired = false;  // any bilinear on site 1 or N
  bool z2_nontrivial = false;     // |delta_plus| > |delta_minus|
};

// Two-band Majorana decomposition. Requires rational beta = 1/2 and the
// nearest-neighbor off-diagonal variant.
MajoranaForm majorana_form(const ModelSpec& spec);

}  // namespace ptlat
