#include "pauliwalk/su2.hpp"

#include <cmath>
#include <stdexcept>

namespace pauliwalk {

namespace {

// binom(ell, ell/2) / 2^ell evaluated from exact integers for small ell and
// by the ratio recurrence r(ell) = r(ell - 2) (ell - 1) / ell beyond, which
// stays accurate where the integer path would overflow.
double central_binomial_ratio(int ell) {
  if (ell <= 60) {
    unsigned long long binom = 1;
    for (int i = 1; i <= ell / 2; ++i) {
      binom = binom * (ell - ell / 2 + i) / i;
    }
    return static_cast<double>(binom) / std::ldexp(1.0, ell);
  }
  double r = central_binomial_ratio(60);
  for (int m = 62; m <= ell; m += 2) r *= (m - 1.0) / m;
  return r;
}

}  // namespace

double kernel_overlap(int ell) {
  if (ell < 1) throw std::invalid_argument("kernel_overlap: ell must be >= 1");
  if (ell % 2 == 1) return 0.0;
  const double magnitude = central_binomial_ratio(ell);
  return (ell / 2) % 2 == 0 ? magnitude : -magnitude;
}

double irrep_gap_norm(int ell) {
  const double f = kernel_overlap(ell);
  return std::max(1.0 - f, 1.0 + 2.0 * f) / 3.0;
}

double su2_design_gap(int t) {
  if (t < 1) throw std::invalid_argument("su2_design_gap: t must be >= 1");
  double best = 0.0;
  // irrep_gap_norm is maximized at ell = 4 and decreases for larger even
  // ell, so the scan can stop early.
  for (int ell = 1; ell <= std::min(t, 4); ++ell) {
    best = std::max(best, irrep_gap_norm(ell));
  }
  return best;
}

SpinIrrep build_spin_irrep(int ell, Eigen::Index dense_limit) {
  if (ell < 1) throw std::invalid_argument("build_spin_irrep: ell >= 1");
  const Eigen::Index dim = 2 * static_cast<Eigen::Index>(ell) + 1;
  if (dim > dense_limit) {
    throw std::length_error("build_spin_irrep: dimension above dense limit");
  }
  SpinIrrep irrep;
  irrep.ell = ell;
  irrep.Jz = MatrixXcd::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    irrep.Jz(i, i) = static_cast<double>(ell) - static_cast<double>(i);
  }
  // Basis index i holds the Jz eigenvalue k = ell - i; the raising operator
  // sends |k> to a_k |k+1> with a_k = sqrt(ell(ell+1) - k(k+1)).
  MatrixXcd raise = MatrixXcd::Zero(dim, dim);
  for (Eigen::Index i = 1; i < dim; ++i) {
    const double k = static_cast<double>(ell) - static_cast<double>(i);
    const double a = std::sqrt(static_cast<double>(ell) * (ell + 1.0) -
                               k * (k + 1.0));
    raise(i - 1, i) = a;
  }
  const MatrixXcd lower = raise.adjoint();
  irrep.Jx = 0.5 * (raise + lower);
  irrep.Jy = std::complex<double>(0, -0.5) * (raise - lower);
  return irrep;
}

VectorXcd kernel_vector(const MatrixXcd& j_op) {
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(j_op);
  Eigen::Index zero_index = -1;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    if (std::abs(es.eigenvalues()(i)) < 0.5) {
      if (zero_index >= 0) {
        throw std::invalid_argument("kernel_vector: kernel is not rank 1");
      }
      zero_index = i;
    }
  }
  if (zero_index < 0) {
    throw std::invalid_argument("kernel_vector: no zero eigenvalue");
  }
  VectorXcd v = es.eigenvectors().col(zero_index);
  Eigen::Index imax = 0;
  v.cwiseAbs().maxCoeff(&imax);
  const std::complex<double> pivot = v(imax);
  v *= std::abs(pivot) / pivot;
  return v;
}

}  // namespace pauliwalk
