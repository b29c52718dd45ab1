#pragma once

#include <complex>
#include <vector>

#include "ptlat/model.hpp"

namespace ptlat {

struct EigenSystem {
  Eigen::VectorXcd values;    // canonical order: Re ascending, Im breaks ties
  Eigen::MatrixXcd vectors;   // column k pairs with values(k), unit 2-norm
  Eigen::VectorXd residuals;  // ||H v - E v||_2 per pair
};

// Full dense eigendecomposition of a (generally non-Hermitian) matrix.
// Throws std::runtime_error if the QR iteration fails to converge.
EigenSystem eigendecompose(const ComplexMatrix& h);

// Coefficients of det(xI - H) = x^n + c[1] x^{n-1} + ... + c[n], with c[0] = 1.
// Faddeev-LeVerrier recurrence; exact in exact arithmetic.
std::vector<std::complex<double>> charpoly_coeffs(const ComplexMatrix& h);

// Independent spectrum route: roots of the characteristic polynomial by
// Durand-Kerner iteration. Restricted to n <= 8 where the polynomial is
// well conditioned. Returned in the canonical (Re, Im) order.
std::vector<std::complex<double>> charpoly_roots(const ComplexMatrix& h);

}  // namespace ptlat
