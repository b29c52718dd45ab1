#pragma once

#include <Eigen/Dense>
#include <complex>
#include <variant>

namespace ptlat {

// Modulation frequency. Rational p/q keeps the lattice commensurate (period q);
// an arbitrary double stands in for an irrational frequency.
struct RationalBeta {
  long num = 1;
  long den = 2;
};

using BetaValue = std::variant<RationalBeta, double>;

double beta_value(const BetaValue& beta);

enum class LatticeVariant {
  OffDiagonalAA,     // bond modulation only
  OffDiagonalAANNN,  // adds uniform next-nearest-neighbor hopping
  DiagonalAA,        // uniform bonds, modulated onsite potential
};

// Site j carries +i*gamma, its mirror N-j+1 carries -i*gamma.
struct ImpurityPlacement {
  int j = 1;
  double gamma = 0.0;
};

struct ModelSpec {
  int n = 2;
  double t = 1.0;
  double lambda = 0.0;
  BetaValue beta = RationalBeta{1, 2};
  double phi = 0.0;
  ImpurityPlacement impurity{};
  double t_nnn = 0.0;  // OffDiagonalAANNN only
  double v = 0.0;      // DiagonalAA only
  LatticeVariant variant = LatticeVariant::OffDiagonalAA;
};

// Dense complex matrix with 1-based accessors matching the site labels.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(int n) : m_(Eigen::MatrixXcd::Zero(n, n)) {}

  int size() const { return static_cast<int>(m_.rows()); }

  std::complex<double>& entry(int row, int col) { return m_(row - 1, col - 1); }
  const std::complex<double>& entry(int row, int col) const {
    return m_(row - 1, col - 1);
  }

  Eigen::MatrixXcd& mat() { return m_; }
  const Eigen::MatrixXcd& mat() const { return m_; }

 private:
  Eigen::MatrixXcd m_;
};

// Throws std::invalid_argument naming the offending field.
void validate(const ModelSpec& spec);

// Matrix element between sites n and n+1: -t(1 + lambda*cos(2 pi beta n + phi)).
// The cosine takes the left endpoint of the bond, 1-based.
double bond_coupling(const ModelSpec& spec, int bond);

// Onsite potential V*cos(2 pi beta n + phi) of the diagonal variant.
double onsite_potential(const ModelSpec& spec, int site);

// Open-chain Hamiltonian for spec.variant. Validates first.
ComplexMatrix build_hamiltonian(const ModelSpec& spec);

}  // namespace ptlat
