#pragma once

#include <cstdint>

#include "pauliwalk/moment.hpp"
#include "pauliwalk/sampler.hpp"

namespace pauliwalk {

/// A plane rotation exp(theta E_{a,b}) mixing coordinates a < b (0-based).
struct ElementaryRotation {
  int a = 0;
  int b = 1;
  double theta = 0.0;
};

/// In-place left multiplication of m by exp(theta E_{a,b}): touches only the
/// two rows a and b, O(N) arithmetic.
void apply_givens(MatrixXd& m, const ElementaryRotation& rot);

/// Arithmetic operations of one apply_givens call at dimension N.
std::uint64_t givens_op_count(int N);

struct OrthoSamplerConfig {
  int N = 3;
  std::int64_t steps = 0;
  GeneratorKind basis = GeneratorKind::elementary;  // or skew_pauli
  std::uint64_t seed = 0;

  WalkConfig walk_config() const;
};

/// k-step random rotation walk applied to the identity. Elementary basis:
/// uniform plane, theta uniform on (-pi, pi), O(N) Givens updates.
/// Skew-Pauli basis (N = 2^n > 4): uniform P with odd Y parity, theta
/// uniform on (-2 pi, 2 pi), dense multiplication by the real matrix
/// exp(i theta P / 2). If ops_out is nonnull it receives the arithmetic
/// operation count of the elementary path.
MatrixXd sample_orthogonal(const OrthoSamplerConfig& cfg,
                           std::uint64_t* ops_out = nullptr);

/// Haar-distributed special orthogonal matrix from a Gaussian matrix and a
/// sign-fixed QR factorization; the determinant is forced to +1 by flipping
/// the last column when needed.
MatrixXd gram_schmidt_haar(int N, std::uint64_t seed);

struct OrthoBenchmark {
  int N = 0;
  std::int64_t steps = 0;
  double givens_ns_per_sample = 0.0;
  double gs_ns_per_sample = 0.0;
  std::uint64_t givens_ops_per_sample = 0;
  std::uint64_t gs_flops_estimate = 0;  // ~2 N^3 for the QR path
  bool givens_faster = false;
};

/// Wall-clock comparison of the two samplers at matching N.
OrthoBenchmark benchmark_ortho(int N, std::int64_t steps, int samples = 3);

}  // namespace pauliwalk
