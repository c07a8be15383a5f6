#include "pauliwalk/ortho.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "pauliwalk/rng.hpp"

namespace pauliwalk {

void apply_givens(MatrixXd& m, const ElementaryRotation& rot) {
  const Eigen::Index n = m.rows();
  if (rot.a < 0 || rot.b <= rot.a || rot.b >= n) {
    throw std::invalid_argument("apply_givens: indices must satisfy 0 <= a < b < N");
  }
  const double c = std::cos(rot.theta);
  const double s = std::sin(rot.theta);
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    const double va = m(rot.a, j);
    const double vb = m(rot.b, j);
    m(rot.a, j) = c * va + s * vb;
    m(rot.b, j) = -s * va + c * vb;
  }
}

std::uint64_t givens_op_count(int N) {
  return 6ull * static_cast<std::uint64_t>(N);  // 4 mul + 2 add per column
}

WalkConfig OrthoSamplerConfig::walk_config() const {
  if (basis == GeneratorKind::elementary) {
    return WalkConfig::elementary_walk(N, steps, AngleMode::continuous(M_PI),
                                       seed);
  }
  if (basis != GeneratorKind::skew_pauli) {
    throw std::invalid_argument(
        "OrthoSamplerConfig: basis must be elementary or skew_pauli");
  }
  int n = 0;
  while ((1 << n) < N) ++n;
  if ((1 << n) != N || N <= 4) {
    throw std::invalid_argument(
        "OrthoSamplerConfig: skew_pauli requires N = 2^n > 4");
  }
  return WalkConfig::skew_walk(n, steps, AngleMode::continuous(2 * M_PI),
                               seed);
}

MatrixXd sample_orthogonal(const OrthoSamplerConfig& cfg,
                           std::uint64_t* ops_out) {
  const WalkConfig walk = cfg.walk_config();
  MatrixXd o = MatrixXd::Identity(cfg.N, cfg.N);
  std::uint64_t ops = 0;
  for (std::int64_t i = 0; i < cfg.steps; ++i) {
    const RotationSample s = sample_step(walk, i);
    if (s.kind == GeneratorKind::elementary) {
      apply_givens(o, {s.plane_a, s.plane_b, s.angle});
      ops += givens_op_count(cfg.N);
    } else {
      // exp(i theta P / 2) = cos(theta/2) 1 - sin(theta/2) Im(P), a real
      // orthogonal matrix because P has odd Y parity.
      const MatrixXd rot =
          std::cos(s.angle / 2) * MatrixXd::Identity(cfg.N, cfg.N) -
          std::sin(s.angle / 2) * to_matrix(s.pauli).imag();
      o = (rot * o).eval();
    }
  }
  if (ops_out != nullptr) *ops_out = ops;
  return o;
}

MatrixXd gram_schmidt_haar(int N, std::uint64_t seed) {
  if (N < 1) throw std::invalid_argument("gram_schmidt_haar: N must be >= 1");
  StepRng rng(seed, 0x6f72746869ull);
  MatrixXd g(N, N);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) g(i, j) = rng.next_normal();
  }
  Eigen::HouseholderQR<MatrixXd> qr(g);
  MatrixXd q = qr.householderQ();
  const MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < N; ++j) {
    if (r(j, j) < 0) q.col(j) = -q.col(j);
  }
  if (q.determinant() < 0) q.col(N - 1) = -q.col(N - 1);
  return q;
}

OrthoBenchmark benchmark_ortho(int N, std::int64_t steps, int samples) {
  using clock = std::chrono::steady_clock;
  OrthoBenchmark bench;
  bench.N = N;
  bench.steps = steps;
  bench.givens_ops_per_sample =
      static_cast<std::uint64_t>(steps) * givens_op_count(N);
  bench.gs_flops_estimate = 2ull * static_cast<std::uint64_t>(N) * N * N;

  const auto t0 = clock::now();
  for (int s = 0; s < samples; ++s) {
    OrthoSamplerConfig cfg{N, steps, GeneratorKind::elementary,
                           static_cast<std::uint64_t>(s)};
    volatile double sink = sample_orthogonal(cfg)(0, 0);
    (void)sink;
  }
  const auto t1 = clock::now();
  for (int s = 0; s < samples; ++s) {
    volatile double sink =
        gram_schmidt_haar(N, static_cast<std::uint64_t>(s))(0, 0);
    (void)sink;
  }
  const auto t2 = clock::now();

  const double to_ns = 1.0 / samples;
  bench.givens_ns_per_sample =
      std::chrono::duration<double, std::nano>(t1 - t0).count() * to_ns;
  bench.gs_ns_per_sample =
      std::chrono::duration<double, std::nano>(t2 - t1).count() * to_ns;
  bench.givens_faster = bench.givens_ns_per_sample < bench.gs_ns_per_sample;
  return bench;
}

}  // namespace pauliwalk
