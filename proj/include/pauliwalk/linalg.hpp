#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

namespace pauliwalk {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

template <typename DerivedA, typename DerivedB>
MatrixXcd kron(const Eigen::MatrixBase<DerivedA>& a,
               const Eigen::MatrixBase<DerivedB>& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

/// t-fold Kronecker power; t = 0 gives the 1x1 identity.
inline MatrixXcd kron_power(const MatrixXcd& a, int t) {
  MatrixXcd out = MatrixXcd::Identity(1, 1);
  for (int i = 0; i < t; ++i) out = kron(out, a).eval();
  return out;
}

inline double max_abs(const MatrixXcd& a) {
  return a.cwiseAbs().maxCoeff();
}

inline bool is_hermitian(const MatrixXcd& a, double tol = 1e-10) {
  return max_abs(a - a.adjoint()) <= tol;
}

}  // namespace pauliwalk
