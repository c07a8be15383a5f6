#pragma once

#include "pauliwalk/linalg.hpp"

namespace pauliwalk {

/// Spin matrices of the (2 ell + 1)-dimensional irrep, normalized so that
/// [Jx, Jy] = i Jz (and cyclic). Jz is diagonal with eigenvalues
/// ell, ell-1, ..., -ell.
struct SpinIrrep {
  int ell = 0;
  MatrixXcd Jx, Jy, Jz;
};

/// Mutual overlap f of the rank-1 kernels of Jx, Jy, Jz on the spin-ell
/// irrep: 0 for odd ell, (-1)^{ell/2} binom(ell, ell/2) / 2^ell for even ell.
double kernel_overlap(int ell);

/// ||K(Jx) + K(Jy) + K(Jz)|| / 3 = max(1 - f, 1 + 2f) / 3 on spin ell.
double irrep_gap_norm(int ell);

/// max over ell = 1..t of irrep_gap_norm: {4, 6, 6, 7}/12 for t = 1..4 and
/// 7/12 beyond.
double su2_design_gap(int t);

/// Ladder-operator construction: an independent numerical oracle for the
/// closed forms above.
SpinIrrep build_spin_irrep(int ell, Eigen::Index dense_limit = 4096);

/// Normalized kernel vector of a spin operator with rank-1 kernel, with the
/// phase fixed so the largest-magnitude component is real positive.
VectorXcd kernel_vector(const MatrixXcd& j_op);

}  // namespace pauliwalk
