#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unsupported/Eigen/MatrixFunctions>

#include "pauliwalk/ortho.hpp"
#include "pauliwalk/rng.hpp"

using namespace pauliwalk;

TEST_CASE("givens update matches the dense exponential") {
  // theta = 0 is a no-op.
  MatrixXd m = MatrixXd::Random(5, 5);
  const MatrixXd before = m;
  apply_givens(m, {1, 3, 0.0});
  CHECK((m - before).cwiseAbs().maxCoeff() == 0.0);

  // Quarter turn on the identity embeds the 2x2 rotation at (1,2).
  MatrixXd id = MatrixXd::Identity(3, 3);
  apply_givens(id, {1, 2, M_PI / 2});
  MatrixXd expected = MatrixXd::Identity(3, 3);
  expected(1, 1) = 0;
  expected(2, 2) = 0;
  expected(1, 2) = 1;
  expected(2, 1) = -1;
  CHECK((id - expected).cwiseAbs().maxCoeff() <= 1e-15);

  // Random updates equal exp(theta E_{a,b}) m.
  StepRng rng(0x617eu, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + static_cast<int>(rng.next_below(6));
    const int a = static_cast<int>(rng.next_below(n - 1));
    const int b = a + 1 + static_cast<int>(rng.next_below(n - 1 - a));
    const double theta = rng.next_symmetric(M_PI);
    MatrixXd mat(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) mat(i, j) = rng.next_normal();
    }
    const MatrixXd dense =
        (theta * elementary_generator(a, b, n)).exp() * mat;
    apply_givens(mat, {a, b, theta});
    CHECK((mat - dense).cwiseAbs().maxCoeff() <= 1e-12);
  }

  CHECK_THROWS_AS(apply_givens(m, {3, 3, 0.1}), std::invalid_argument);
  CHECK_THROWS_AS(apply_givens(m, {0, 5, 0.1}), std::invalid_argument);
}

TEST_CASE("orthogonal sampler contracts") {
  // k = 0 gives the identity.
  OrthoSamplerConfig zero{4, 0, GeneratorKind::elementary, 1};
  CHECK((sample_orthogonal(zero) - MatrixXd::Identity(4, 4))
            .cwiseAbs()
            .maxCoeff() == 0.0);

  for (const OrthoSamplerConfig cfg :
       {OrthoSamplerConfig{5, 1000, GeneratorKind::elementary, 7},
        OrthoSamplerConfig{8, 50, GeneratorKind::skew_pauli, 7}}) {
    const MatrixXd o = sample_orthogonal(cfg);
    CHECK((o.transpose() * o - MatrixXd::Identity(cfg.N, cfg.N)).norm() <=
          1e-10);
    CHECK(std::abs(o.determinant() - 1.0) <= 1e-8);
    CHECK((o - sample_orthogonal(cfg)).cwiseAbs().maxCoeff() == 0.0);
  }

  CHECK_THROWS_AS(
      sample_orthogonal({4, 1, GeneratorKind::skew_pauli, 0}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      sample_orthogonal({6, 1, GeneratorKind::skew_pauli, 0}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      sample_orthogonal({2, 1, GeneratorKind::elementary, 0}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      sample_orthogonal({8, 1, GeneratorKind::full_pauli, 0}),
      std::invalid_argument);
}

TEST_CASE("skew-Pauli rotations are real matrices") {
  for (int n = 1; n <= 3; ++n) {
    for (const PauliString& p : enumerate_skew_paulis(n)) {
      const MatrixXcd rot = pauli_rotation_matrix(p, 1.234);
      CHECK(max_abs(MatrixXcd(rot.imag().cast<std::complex<double>>())) <=
            1e-12);
    }
  }
}

TEST_CASE("givens chain stays orthogonal over many steps") {
  OrthoSamplerConfig cfg{16, 10000, GeneratorKind::elementary, 3};
  std::uint64_t ops = 0;
  const MatrixXd o = sample_orthogonal(cfg, &ops);
  CHECK(ops == 10000ull * givens_op_count(16));
  CHECK((o.transpose() * o - MatrixXd::Identity(16, 16)).norm() <= 1e-10);
}

TEST_CASE("gram-schmidt haar baseline") {
  CHECK(gram_schmidt_haar(1, 5)(0, 0) == doctest::Approx(1.0));
  for (std::uint64_t seed : {0ull, 1ull, 2ull}) {
    const MatrixXd o = gram_schmidt_haar(6, seed);
    CHECK((o.transpose() * o - MatrixXd::Identity(6, 6)).norm() <= 1e-10);
    CHECK(o.determinant() == doctest::Approx(1.0).epsilon(1e-8));
  }

  // Sphere marginal of the first column: E[O11^2] = 1/N within 4 sigma.
  const int N = 4;
  const int samples = 20000;
  double sum = 0.0, sumsq = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double v = gram_schmidt_haar(N, 100 + s)(0, 0);
    sum += v * v;
    sumsq += v * v * v * v;
  }
  const double mean = sum / samples;
  const double se =
      std::sqrt((sumsq / samples - mean * mean) / samples);
  CHECK(std::abs(mean - 1.0 / N) <= 4 * se);
}

TEST_CASE("benchmark fields") {
  const OrthoBenchmark b = benchmark_ortho(64, 200, 2);
  CHECK(b.N == 64);
  CHECK(b.givens_ns_per_sample >= 0.0);
  CHECK(b.gs_ns_per_sample >= 0.0);
  CHECK(b.givens_ops_per_sample == 200ull * givens_op_count(64));
  CHECK(b.gs_flops_estimate == 2ull * 64 * 64 * 64);
  // O(kN) vs O(N^3): the arithmetic comparison that favors few steps.
  CHECK(b.givens_ops_per_sample < b.gs_flops_estimate);
}
