#pragma once

#include <optional>
#include <string>

#include "pauliwalk/linalg.hpp"
#include "pauliwalk/pauli.hpp"

namespace pauliwalk {

/// Result of a spectral-gap computation for one moment operator.
struct GapReport {
  std::string group;          // "su" or "so"
  std::string generator_set;  // "full_pauli", "skew_pauli", "elementary"
  int num_qubits = 0;         // 0 when the generator set is not qubit-based
  int matrix_dim = 0;         // N
  int t = 0;
  Eigen::Index rep_dim = 0;   // dimension of the represented space
  double gap_norm = 0.0;
  double theorem_bound = 0.0;
  std::optional<double> improved_bound;
  int trivial_dim = 0;
  double tol = 1e-9;
  std::string method;
};

/// The represented generator on (C^N)^{2t}: slots 0..t-1 carry P/2 and
/// slots t..2t-1 carry -conj(P)/2. Hermitian with integer eigenvalues in
/// [-t, t], every integer in that range occurring.
MatrixXcd build_tau_star(const PauliString& p, int t,
                         Eigen::Index dense_limit = 4096);

/// Sum over the t slots of (C^N)^t of a single-site generator.
MatrixXcd sum_over_slots(const MatrixXcd& gen, int t,
                         Eigen::Index dense_limit = 4096);

/// Orthogonal projector onto the span of eigenvectors of h with
/// |eigenvalue| < zero_threshold. h must be Hermitian; the default threshold
/// suits integer spectra, pass 0.25 for half-integer spectra.
MatrixXcd kernel_projector(const MatrixXcd& h, double zero_threshold = 0.5);

/// Kernel projector of build_tau_star(p, t) assembled from ket-block
/// spectral projectors, K = sum_m Q_m (x) conj(Q_m). Exact and cheap: only
/// an N^t-dimensional eigenproblem is solved.
MatrixXcd pauli_kernel_projector(const PauliString& p, int t,
                                 Eigen::Index dense_limit = 4096);

/// Mean kernel projector M = E_P K(tau_*(P/2)) over the 4^n - 1 nonidentity
/// Pauli strings, in the canonical enumeration order.
MatrixXcd mean_kernel_projector(int n, int t, Eigen::Index dense_limit = 4096);

/// Average over the discrete angle set Theta_t of the walk-step matrices
/// (e^{i theta P/2})^{(x)t} (x) conj(...), which equals the kernel projector
/// of tau_*(P/2) because the spectrum is integral.
MatrixXcd discrete_angle_average(const PauliString& p, int t,
                                 Eigen::Index dense_limit = 4096);

/// Frobenius norm of discrete_angle_average - pauli_kernel_projector,
/// computed exactly from the Gram matrix of the Kronecker-factored terms
/// without materializing the rep_dim^2 matrices.
double discrete_angle_kernel_defect(const PauliString& p, int t);

/// Orthogonal projector onto the span of the vectorized permutation
/// operators on (C^N)^t, i.e. the trivial subrepresentation subspace of
/// U -> (U (x) conj U)^{(x)t}. Built from the permutation Gram matrix with
/// entries N^{#cycles} via pseudo-inverse.
MatrixXcd haar_projector(int n, int t, Eigen::Index dense_limit = 4096);

/// Gram matrix of the t! vectorized permutation operators, entries
/// N^{#cycles(pi sigma^{-1})} in lexicographic permutation order.
MatrixXd permutation_gram(int N, int t);

/// ||M - H|| together with the bound 1 - 1/(4t) - 1/(4^n - 1); throws if the
/// bound is violated beyond tolerance.
GapReport spectral_gap_report(int n, int t, Eigen::Index dense_limit = 4096);

enum class OrthoBasis { skew_pauli, elementary };

/// The skew generator E_{a,b} = |a><b| - |b><a| as a dense real matrix.
MatrixXd elementary_generator(int a, int b, int N);

/// Spectral gap of the t-th moment operator of a random rotation walk on
/// SO(N), for either generator set of the orthogonal construction. The
/// trivial subspace is read off as the eigenvalue-1 eigenspace of the mean
/// kernel projector.
GapReport orthogonal_moment_gap(int N, int t, OrthoBasis basis,
                                Eigen::Index dense_limit = 4096);

/// Integer power with overflow / dense-limit guard; throws std::length_error
/// when base^exp exceeds the limit.
Eigen::Index checked_dim(Eigen::Index base, int exp, Eigen::Index limit);

}  // namespace pauliwalk
