#pragma once

#include <cstdint>
#include <vector>

#include "pauliwalk/linalg.hpp"
#include "pauliwalk/pauli.hpp"

namespace pauliwalk {

/// binom(n, k) in exact integer arithmetic; throws on overflow.
std::uint64_t binomial(int n, int k);

/// The symmetric subspace Sym^t(C^N) inside (C^N)^t, with the isometry from
/// the occupation-number basis. States on the symmetric sector are dense
/// Hermitian matrices of dimension binom(N+t-1, t).
struct SymmetricSpace {
  int N = 0;
  int t = 0;
  Eigen::Index dim = 0;  // binom(N+t-1, t)
  MatrixXcd isometry;    // N^t x dim, orthonormal columns
};

SymmetricSpace build_symmetric_space(int N, int t,
                                     Eigen::Index dense_limit = 4096);

/// The Haar moment state: maximally mixed on the symmetric sector.
MatrixXcd haar_state_moment(int N, int t, Eigen::Index dense_limit = 4096);

/// (|alpha><alpha|)^{(x)t} in symmetric coordinates.
MatrixXcd symmetric_pure_power(const SymmetricSpace& sym,
                               const VectorXcd& alpha);

/// The mixed-unitary channel averaging (e^{i theta P/2})^{(x)t} eta (..)^dag
/// over uniform P and theta, restricted to the symmetric sector. The theta
/// average is exact: in the eigenbasis of the represented generator the
/// conjugation action has integer eigenvalue differences, so averaging zeroes
/// the blocks between distinct eigenvalues.
class PauliStateChannel {
 public:
  PauliStateChannel(int n, int t, Eigen::Index dense_limit = 4096);

  const SymmetricSpace& sym() const { return sym_; }
  MatrixXcd apply(const MatrixXcd& eta) const;
  MatrixXcd apply_power(MatrixXcd eta, int k) const;

 private:
  struct Term {
    MatrixXcd vectors;            // eigenvectors of the sector generator
    std::vector<int> two_lambda;  // rounded 2 * eigenvalue per column
  };
  SymmetricSpace sym_;
  std::vector<Term> terms_;
};

/// (1 - N/(2t(N+1)) - N/(2(N^2-1)))^k sqrt(binom(N+t-1, t)).
double state_design_bound(int N, int t, int k);

struct StateDesignResult {
  double distance = 0.0;  // Schatten-1 norm of the deviation
  double bound = 0.0;
  Eigen::Index dim_sym = 0;
};

/// Distance of the k-step channel output from the Haar moment, starting from
/// (|alpha><alpha|)^{(x)t}; throws if the bound is violated beyond 1e-8.
StateDesignResult state_design_distance(int n, int t, int k,
                                        const VectorXcd& alpha,
                                        Eigen::Index dense_limit = 4096);

/// Haar-random state vector of dimension N from the given seed.
VectorXcd random_state(int N, std::uint64_t seed);

}  // namespace pauliwalk
