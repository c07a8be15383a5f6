#pragma once

#include <optional>

#include <Eigen/Dense>

namespace pauliwalk {

/// Highest weight of an su(N) irrep in the sum-zero normalization:
/// nonincreasing integers summing to 0, with the coordinate dot product as
/// the Killing form.
struct HighestWeight {
  Eigen::VectorXi mu;

  explicit HighestWeight(Eigen::VectorXi entries);
  int dim_n() const { return static_cast<int>(mu.size()); }
};

/// (1/ell^2) sum_P J_P^2 evaluated from the highest weight:
/// N (<mu,mu> + <mu,delta>) / (mu_1 + .. + mu_{N/2} - mu_{N/2+1} - .. )^2
/// with delta = (N-1, N-3, ..., -(N-1)). Requires even N and a nonzero
/// denominator.
double casimir_ratio(const HighestWeight& weight);

/// Bounds on sum_P J_P^2 for an su(N)-irrep in which the represented Pauli
/// operators have norm ell: lower N^2 ell / 4 + ell^2, upper
/// N (N-1) ell / 2 + (N-1) ell^2.
double casimir_lower_bound(int N, double ell);
double casimir_upper_bound(int N, double ell);

struct GapBound {
  double main;                   // 1 - (1/4t) N^2/(N^2-1) - 1/(N^2-1)
  std::optional<double> small_t; // 1 - (1/2t) N(N-t+1)/(N^2-1), for t <= N/2
};

/// Closed-form spectral-gap bounds for the uniform Pauli-rotation walk on
/// SU(2^n) at moment order t.
GapBound gap_bound(int n, int t);

/// The minimizing weight (1^t, 0^{N-2t}, (-1)^t) of the small-t bound.
HighestWeight small_t_minimizer_weight(int N, int t);

}  // namespace pauliwalk
