#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pauliwalk/moment.hpp"
#include "pauliwalk/state_design.hpp"

using namespace pauliwalk;

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(11, 2) == 55);
  CHECK_THROWS_AS(binomial(200, 100), std::overflow_error);
}

TEST_CASE("symmetric space isometry") {
  for (const auto& [N, t] : std::vector<std::pair<int, int>>{
           {2, 1}, {2, 2}, {2, 3}, {4, 2}}) {
    const SymmetricSpace sym = build_symmetric_space(N, t);
    CHECK(sym.dim == static_cast<Eigen::Index>(binomial(N + t - 1, t)));
    const MatrixXcd gram = sym.isometry.adjoint() * sym.isometry;
    CHECK(max_abs(gram - MatrixXcd::Identity(sym.dim, sym.dim)) <= 1e-12);
  }
  CHECK(build_symmetric_space(2, 2).dim == 3);
  CHECK(build_symmetric_space(4, 2).dim == 10);
}

TEST_CASE("haar state moment") {
  CHECK(max_abs(haar_state_moment(2, 1) -
                0.5 * MatrixXcd::Identity(2, 2)) == 0.0);
  CHECK(max_abs(haar_state_moment(2, 2) -
                MatrixXcd::Identity(3, 3) / 3.0) == 0.0);
}

TEST_CASE("channel is exact, trace preserving, positive") {
  for (const auto& [n, t] : std::vector<std::pair<int, int>>{
           {1, 1}, {1, 2}, {2, 2}}) {
    const int N = 1 << n;
    const PauliStateChannel channel(n, t);
    const MatrixXcd haar = haar_state_moment(N, t);
    CHECK(max_abs(channel.apply(haar) - haar) <= 1e-10);  // fixed point

    const MatrixXcd input =
        symmetric_pure_power(channel.sym(), random_state(N, 3));
    CHECK(max_abs(channel.apply_power(input, 0) - input) == 0.0);

    const MatrixXcd output = channel.apply(input);
    CHECK(std::abs(output.trace().real() - 1.0) <= 1e-10);
    CHECK(std::abs(output.trace().imag()) <= 1e-12);
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(output,
                                                Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() >= -1e-10);
  }
}

TEST_CASE("one exact step against the quadrature oracle at N=2, t=1") {
  const PauliStateChannel channel(1, 1);
  VectorXcd e0 = VectorXcd::Zero(2);
  e0(0) = 1.0;
  const MatrixXcd input = symmetric_pure_power(channel.sym(), e0);
  const MatrixXcd one_step = channel.apply(input);

  // Closed form: Bloch vector contracts by 1/3.
  MatrixXcd expected(2, 2);
  expected << 2.0 / 3, 0, 0, 1.0 / 3;
  CHECK(max_abs(one_step - expected) <= 1e-12);

  // Brute-force quadrature over theta with 1e4 points per Pauli.
  const int points = 10000;
  MatrixXcd quad = MatrixXcd::Zero(2, 2);
  for (const PauliString& p : enumerate_paulis(1)) {
    for (int j = 0; j < points; ++j) {
      const double theta = -M_PI + (j + 0.5) * 2 * M_PI / points;
      const MatrixXcd r = pauli_rotation_matrix(p, theta);
      quad += r * input * r.adjoint();
    }
  }
  quad /= 3.0 * points;
  CHECK(max_abs(one_step - quad) <= 1e-6);
}

TEST_CASE("trace distance values and bound") {
  VectorXcd e0 = VectorXcd::Zero(2);
  e0(0) = 1.0;
  const StateDesignResult r0 = state_design_distance(1, 1, 0, e0);
  CHECK(r0.distance == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r0.dim_sym == 2);

  // Bound at N=2, t=1: sqrt(2) (1/3)^k, matching the exact per-step Bloch
  // contraction by 1/3.
  CHECK(state_design_bound(2, 1, 0) == doctest::Approx(std::sqrt(2.0)));
  CHECK(state_design_bound(2, 1, 3) ==
        doctest::Approx(std::sqrt(2.0) / 27.0).epsilon(1e-12));
  for (int k = 1; k <= 6; ++k) {
    const StateDesignResult r = state_design_distance(1, 1, k, e0);
    CHECK(r.distance == doctest::Approx(std::pow(1.0 / 3, k)).epsilon(1e-9));
    CHECK(r.distance <= r.bound + 1e-8);
  }
}

TEST_CASE("distance is nonincreasing in k on the tested grid") {
  for (const auto& [n, t, kmax] : std::vector<std::tuple<int, int, int>>{
           {1, 1, 6}, {1, 2, 6}, {2, 2, 3}}) {
    const VectorXcd alpha = random_state(1 << n, 21);
    double previous = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= kmax; ++k) {
      const double d = state_design_distance(n, t, k, alpha).distance;
      CHECK(d <= previous + 1e-10);
      previous = d;
    }
  }
}

TEST_CASE("k = 0 distance is independent of alpha") {
  // The input component norms are alpha-independent, so the k = 0 distance
  // is a constant; for k >= 1 the exact channel is not a scalar on each
  // irreducible block and the distance genuinely varies with alpha (the
  // bound still holds for every alpha).
  for (int t : {1, 2, 3}) {
    const double reference =
        state_design_distance(1, t, 0, random_state(2, 1)).distance;
    for (std::uint64_t seed = 2; seed <= 6; ++seed) {
      const double d =
          state_design_distance(1, t, 0, random_state(2, seed)).distance;
      CHECK(std::abs(d - reference) <= 1e-9);
    }
  }
  for (std::uint64_t seed = 2; seed <= 6; ++seed) {
    for (int k = 1; k <= 3; ++k) {
      const StateDesignResult r =
          state_design_distance(1, 2, k, random_state(2, seed));
      CHECK(r.distance <= r.bound + 1e-8);
    }
  }
}

TEST_CASE("frozen regression at N=4, t=2, k=5") {
  const StateDesignResult r = state_design_distance(2, 2, 5,
                                                    random_state(4, 11));
  CHECK(r.dim_sym == 10);
  CHECK(r.bound ==
        doctest::Approx(std::sqrt(10.0) * std::pow(2.0 / 3, 5))
            .epsilon(1e-12));
  CHECK(r.distance == doctest::Approx(0.075593980413940).epsilon(1e-8));
}
