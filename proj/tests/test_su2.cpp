#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pauliwalk/moment.hpp"
#include "pauliwalk/state_design.hpp"
#include "pauliwalk/su2.hpp"

using namespace pauliwalk;

TEST_CASE("kernel overlap closed form") {
  CHECK(kernel_overlap(2) == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(kernel_overlap(4) == doctest::Approx(3.0 / 8).epsilon(1e-14));
  CHECK(kernel_overlap(3) == 0.0);
  CHECK(kernel_overlap(1) == 0.0);
  CHECK_THROWS_AS(kernel_overlap(0), std::invalid_argument);
  // Large-ell path stays monotone decreasing in magnitude.
  CHECK(std::abs(kernel_overlap(64)) < std::abs(kernel_overlap(62)));
  CHECK(std::abs(kernel_overlap(60)) ==
        doctest::Approx(std::abs(kernel_overlap(58)) * 59.0 / 60.0)
            .epsilon(1e-13));
}

TEST_CASE("per-irrep norm and design gap") {
  CHECK(irrep_gap_norm(1) == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(irrep_gap_norm(2) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(irrep_gap_norm(4) == doctest::Approx(7.0 / 12).epsilon(1e-14));

  CHECK(su2_design_gap(1) == doctest::Approx(4.0 / 12).epsilon(1e-14));
  CHECK(su2_design_gap(2) == doctest::Approx(6.0 / 12).epsilon(1e-14));
  CHECK(su2_design_gap(3) == doctest::Approx(6.0 / 12).epsilon(1e-14));
  CHECK(su2_design_gap(4) == doctest::Approx(7.0 / 12).epsilon(1e-14));
  CHECK(su2_design_gap(100) == doctest::Approx(7.0 / 12).epsilon(1e-14));
}

TEST_CASE("ladder construction") {
  for (int ell = 1; ell <= 8; ++ell) {
    const SpinIrrep irrep = build_spin_irrep(ell);
    const Eigen::Index dim = 2 * ell + 1;
    const std::complex<double> i_unit(0, 1);
    CHECK(max_abs(irrep.Jx * irrep.Jy - irrep.Jy * irrep.Jx -
                  i_unit * irrep.Jz) <= 1e-12);
    CHECK(max_abs(irrep.Jy * irrep.Jz - irrep.Jz * irrep.Jy -
                  i_unit * irrep.Jx) <= 1e-12);
    CHECK(max_abs(irrep.Jz * irrep.Jx - irrep.Jx * irrep.Jz -
                  i_unit * irrep.Jy) <= 1e-12);

    // Casimir identity Jx^2 + Jy^2 + Jz^2 = ell (ell + 1).
    const MatrixXcd casimir =
        irrep.Jx * irrep.Jx + irrep.Jy * irrep.Jy + irrep.Jz * irrep.Jz;
    CHECK(max_abs(casimir - ell * (ell + 1.0) *
                                MatrixXcd::Identity(dim, dim)) <= 1e-10);

    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(irrep.Jz,
                                                Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().cwiseAbs().maxCoeff() ==
          doctest::Approx(ell).epsilon(1e-12));
  }
  CHECK_THROWS_AS(build_spin_irrep(0), std::invalid_argument);
}

TEST_CASE("numerical kernels vs closed form, ell = 1..8") {
  for (int ell = 1; ell <= 8; ++ell) {
    const SpinIrrep irrep = build_spin_irrep(ell);
    const VectorXcd x = kernel_vector(irrep.Jx);
    const VectorXcd y = kernel_vector(irrep.Jy);
    const VectorXcd z = kernel_vector(irrep.Jz);
    const double f = kernel_overlap(ell);

    CHECK(std::abs(std::abs(x.dot(y)) - std::abs(f)) <= 1e-10);
    CHECK(std::abs(std::abs(y.dot(z)) - std::abs(f)) <= 1e-10);
    CHECK(std::abs(std::abs(z.dot(x)) - std::abs(f)) <= 1e-10);

    if (ell % 2 == 0) {
      const std::complex<double> triple = x.dot(y) * y.dot(z) * z.dot(x);
      CHECK(std::abs(triple.imag()) <= 1e-10);
      const double expected_sign = (ell / 2) % 2 == 0 ? 1.0 : -1.0;
      CHECK(triple.real() * expected_sign > 0.0);
    }

    // ||K(Jx) + K(Jy) + K(Jz)|| / 3 matches the closed form.
    const MatrixXcd sum = kernel_projector(irrep.Jx) +
                          kernel_projector(irrep.Jy) +
                          kernel_projector(irrep.Jz);
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(sum, Eigen::EigenvaluesOnly);
    CHECK(std::abs(es.eigenvalues().maxCoeff() / 3.0 - irrep_gap_norm(ell)) <=
          1e-10);
  }
}

TEST_CASE("closed form matches the moment engine") {
  for (int t = 1; t <= 3; ++t) {
    CHECK(std::abs(su2_design_gap(t) - spectral_gap_report(1, t).gap_norm) <=
          1e-9);
  }
}

TEST_CASE("central binomial convolution identity") {
  for (int n = 0; n <= 12; ++n) {
    std::uint64_t sum = 0;
    for (int i = 0; i <= n; ++i) {
      sum += binomial(2 * i, i) * binomial(2 * (n - i), n - i);
    }
    CHECK(sum == (1ull << (2 * n)));
  }
}
