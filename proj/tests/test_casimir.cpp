#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pauliwalk/casimir.hpp"
#include "pauliwalk/moment.hpp"
#include "pauliwalk/su2.hpp"

using namespace pauliwalk;

namespace {

HighestWeight weight(std::initializer_list<int> entries) {
  Eigen::VectorXi mu(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (int v : entries) mu(i++) = v;
  return HighestWeight(mu);
}

}  // namespace

TEST_CASE("highest weight validation") {
  CHECK_THROWS_AS(weight({1, 2, -3, 0}), std::invalid_argument);  // not sorted
  CHECK_THROWS_AS(weight({2, 1, 0, 0}), std::invalid_argument);   // sum != 0
  CHECK_NOTHROW(weight({1, 0, 0, -1}));
  CHECK_THROWS_AS(casimir_ratio(weight({0, 0, 0, 0})),
                  std::invalid_argument);  // zero denominator
  CHECK_THROWS_AS(casimir_ratio(weight({1, 0, -1})),
                  std::invalid_argument);  // odd N
}

TEST_CASE("casimir ratio closed forms") {
  // Spin-ell of su(2): ratio (ell + 1) / ell.
  for (int ell = 1; ell <= 4; ++ell) {
    CHECK(casimir_ratio(weight({ell, -ell})) ==
          doctest::Approx((ell + 1.0) / ell).epsilon(1e-14));
  }
  CHECK(casimir_ratio(weight({1, -1})) == doctest::Approx(2.0));

  // Minimizer at N=4, t=2 and the adjoint weight of su(4).
  CHECK(casimir_ratio(weight({1, 1, -1, -1})) == doctest::Approx(3.0));
  CHECK(casimir_ratio(weight({1, 0, 0, -1})) == doctest::Approx(8.0));
}

TEST_CASE("casimir ratio against the spin-matrix oracle") {
  // sum_{P in P_1} J_P^2 = Jx^2 + Jy^2 + Jz^2 = ell(ell+1) 1, so the ratio
  // is ell(ell+1) / ell^2.
  for (int ell = 1; ell <= 4; ++ell) {
    const SpinIrrep irrep = build_spin_irrep(ell);
    const MatrixXcd sum =
        irrep.Jx * irrep.Jx + irrep.Jy * irrep.Jy + irrep.Jz * irrep.Jz;
    const double scalar = sum(0, 0).real();
    CHECK(std::abs(scalar / (static_cast<double>(ell) * ell) -
                   casimir_ratio(weight({ell, -ell}))) <= 1e-10);
  }
}

TEST_CASE("adjoint block of the tensor representation at n=2, t=1") {
  // tau at t=1 is trivial + adjoint; the Casimir sum acts by 0 and by the
  // adjoint-weight ratio (= 8 at ell = 1).
  const Eigen::Index dim = 16;
  MatrixXcd casimir = MatrixXcd::Zero(dim, dim);
  for (const PauliString& p : enumerate_paulis(2)) {
    const MatrixXcd tau = build_tau_star(p, 1);
    casimir += tau * tau;
  }
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(casimir,
                                              Eigen::EigenvaluesOnly);
  CHECK(std::abs(es.eigenvalues().minCoeff()) <= 1e-9);
  CHECK(es.eigenvalues().maxCoeff() == doctest::Approx(8.0).epsilon(1e-10));
  int zero_count = 0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (es.eigenvalues()(i) < 1e-6) ++zero_count;
  }
  CHECK(zero_count == 1);
}

TEST_CASE("lower and upper bounds") {
  CHECK(casimir_lower_bound(2, 1.0) == doctest::Approx(2.0));
  CHECK(casimir_upper_bound(2, 1.0) == doctest::Approx(2.0));
  CHECK(casimir_lower_bound(4, 1.0) == doctest::Approx(5.0));
  CHECK(casimir_upper_bound(4, 1.0) == doctest::Approx(9.0));
}

TEST_CASE("gap bounds") {
  const GapBound b11 = gap_bound(1, 1);
  CHECK(b11.main == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(b11.small_t.has_value());

  const GapBound b22 = gap_bound(2, 2);
  REQUIRE(b22.small_t.has_value());
  CHECK(*b22.small_t == doctest::Approx(0.8).epsilon(1e-14));

  const GapBound b13 = gap_bound(1, 3);
  CHECK(b13.main == doctest::Approx(5.0 / 9).epsilon(1e-14));
  CHECK_FALSE(b13.small_t.has_value());

  CHECK_THROWS_AS(gap_bound(0, 1), std::invalid_argument);
}

TEST_CASE("small-t minimizer saturates N(N-t+1)/(2t)") {
  for (int N : {4, 8, 16}) {
    for (int t = 1; 2 * t <= N; ++t) {
      const double expected = N * (N - t + 1.0) / (2.0 * t);
      CHECK(casimir_ratio(small_t_minimizer_weight(N, t)) ==
            doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("computed gaps respect both closed-form bounds") {
  for (const auto& [n, t] :
       std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
    const double gap = spectral_gap_report(n, t).gap_norm;
    const GapBound bound = gap_bound(n, t);
    CHECK(gap <= bound.main + 1e-9);
    if (bound.small_t.has_value()) CHECK(gap <= *bound.small_t + 1e-9);
  }
}

TEST_CASE("Casimir sum commutes with every generator at n=1, t=2") {
  MatrixXcd casimir = MatrixXcd::Zero(16, 16);
  std::vector<MatrixXcd> taus;
  for (const PauliString& p : enumerate_paulis(1)) {
    taus.push_back(build_tau_star(p, 2));
    casimir += taus.back() * taus.back();
  }
  for (const MatrixXcd& tau : taus) {
    CHECK(max_abs(casimir * tau - tau * casimir) <= 1e-9);
  }
}
