#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "pauliwalk/linalg.hpp"
#include "pauliwalk/pauli.hpp"

using namespace pauliwalk;

namespace {

MatrixXcd dense_product(const PauliString& a, const PauliString& b) {
  return to_matrix(a) * to_matrix(b);
}

}  // namespace

TEST_CASE("canonical enumeration") {
  const auto p1 = enumerate_paulis(1);
  REQUIRE(p1.size() == 3);
  CHECK(p1[0].str() == "X");
  CHECK(p1[1].str() == "Y");
  CHECK(p1[2].str() == "Z");

  CHECK(enumerate_paulis(2).size() == 15);

  const auto p3 = enumerate_paulis(3);
  CHECK(p3.size() == 63);
  std::set<std::string> seen;
  for (const auto& p : p3) {
    CHECK_FALSE(p.is_identity());
    seen.insert(p.str());
  }
  CHECK(seen.size() == 63);

  for (std::uint64_t i = 0; i < p3.size(); ++i) CHECK(pauli_at(3, i) == p3[i]);

  CHECK_THROWS_AS(enumerate_paulis(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_paulis(13), std::invalid_argument);
  CHECK_THROWS_AS(pauli_at(1, 3), std::invalid_argument);
  // Mask arithmetic works to 63 qubits, ranked access to 31.
  CHECK(PauliString::from_str(std::string(63, 'Y')).weight() == 63);
  CHECK_THROWS_AS(pauli_count(32), std::invalid_argument);
  CHECK_THROWS_AS(skew_pauli_at(40, 0), std::invalid_argument);
}

TEST_CASE("set sizes for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(enumerate_paulis(n).size() == (1ull << (2 * n)) - 1);
    CHECK(enumerate_skew_paulis(n).size() ==
          (1ull << (n - 1)) * ((1ull << n) - 1));
  }
}

TEST_CASE("string round trip") {
  const PauliString p = PauliString::from_str("XZXZXXXZ");
  CHECK(p.num_qubits == 8);
  CHECK(p.str() == "XZXZXXXZ");
  CHECK(p.letter(0) == 'X');
  CHECK(p.letter(1) == 'Z');
  CHECK(p.weight() == 8);
  CHECK(PauliString::from_str("IYI").weight() == 1);
  CHECK_THROWS_AS(PauliString::from_str("XQ"), std::invalid_argument);
}

TEST_CASE("multiply phases") {
  const PauliString x = PauliString::from_str("X");
  const PauliString y = PauliString::from_str("Y");
  const PauliString z = PauliString::from_str("Z");

  const PauliProduct xy = multiply(x, y);
  CHECK(xy.string == z);
  CHECK(xy.phase() == std::complex<double>(0, 1));

  const PauliProduct zz = multiply(z, z);
  CHECK(zz.string.is_identity());
  CHECK(zz.phase() == std::complex<double>(1, 0));

  const PauliString xz = PauliString::from_str("XZ");
  const PauliString zz2 = PauliString::from_str("ZZ");
  const PauliProduct prod = multiply(xz, zz2);
  const MatrixXcd expected = dense_product(xz, zz2);
  CHECK(max_abs(prod.phase() * to_matrix(prod.string) - expected) == 0.0);

  CHECK_THROWS_AS(multiply(x, xz), std::invalid_argument);
}

TEST_CASE("multiply agrees with dense products, n <= 3 exhaustive") {
  for (int n = 1; n <= 3; ++n) {
    const auto paulis = enumerate_paulis(n);
    for (const auto& a : paulis) {
      for (const auto& b : paulis) {
        const PauliProduct p = multiply(a, b);
        const MatrixXcd lhs = p.phase() * to_matrix(p.string);
        CHECK(max_abs(lhs - dense_product(a, b)) == 0.0);
      }
    }
  }
}

TEST_CASE("multiply is associative, n = 2 exhaustive") {
  const auto paulis = enumerate_paulis(2);
  for (const auto& a : paulis) {
    for (const auto& b : paulis) {
      const PauliProduct ab = multiply(a, b);
      for (const auto& c : paulis) {
        const PauliProduct bc = multiply(b, c);
        const PauliProduct left = multiply(ab.string, c);
        const PauliProduct right = multiply(a, bc.string);
        CHECK(left.string == right.string);
        CHECK((left.phase_exponent + ab.phase_exponent) % 4 ==
              (right.phase_exponent + bc.phase_exponent) % 4);
      }
    }
  }
}

TEST_CASE("commutes") {
  const PauliString x = PauliString::from_str("X");
  const PauliString z = PauliString::from_str("Z");
  CHECK_FALSE(commutes(x, z));
  CHECK(commutes(PauliString::from_str("XX"), PauliString::from_str("ZZ")));
  CHECK_THROWS_AS(commutes(x, PauliString::from_str("XX")),
                  std::invalid_argument);

  // Against the dense commutator for n <= 3 (exhaustive).
  for (int n = 1; n <= 3; ++n) {
    for (const auto& a : enumerate_paulis(n)) {
      for (const auto& b : enumerate_paulis(n)) {
        const MatrixXcd comm = dense_product(a, b) - dense_product(b, a);
        CHECK(commutes(a, b) == (max_abs(comm) == 0.0));
      }
    }
  }
}

TEST_CASE("to_matrix basics") {
  MatrixXcd y_expected(2, 2);
  y_expected << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0;
  CHECK(max_abs(to_matrix(PauliString::from_str("Y")) - y_expected) == 0.0);

  const MatrixXcd zi = to_matrix(PauliString::from_str("ZI"));
  Eigen::Vector4cd diag;
  diag << 1, 1, -1, -1;
  CHECK(max_abs(zi - MatrixXcd(diag.asDiagonal())) == 0.0);

  PauliString big;
  big.num_qubits = 13;
  big.x_bits = 1;
  CHECK_THROWS_AS(to_matrix(big), std::length_error);
}

TEST_CASE("to_matrix properties for all p, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const Eigen::Index dim = Eigen::Index(1) << n;
    const MatrixXcd id = MatrixXcd::Identity(dim, dim);
    for (const auto& p : enumerate_paulis(n)) {
      const MatrixXcd m = to_matrix(p);
      CHECK(std::abs(m.trace()) == 0.0);
      CHECK(max_abs(m - m.adjoint()) == 0.0);
      CHECK(max_abs(m * m - id) == 0.0);
    }
  }
}

TEST_CASE("y parity and the skew set") {
  CHECK(y_parity_odd(PauliString::from_str("YII")));
  CHECK_FALSE(y_parity_odd(PauliString::from_str("YY")));
  CHECK_FALSE(y_parity_odd(PauliString::from_str("XZ")));

  const auto y1 = enumerate_skew_paulis(1);
  REQUIRE(y1.size() == 1);
  CHECK(y1[0].str() == "Y");
  CHECK(enumerate_skew_paulis(2).size() == 6);
  CHECK(enumerate_skew_paulis(3).size() == 28);

  for (int n = 1; n <= 4; ++n) {
    const auto skew = enumerate_skew_paulis(n);
    REQUIRE(skew.size() == skew_pauli_count(n));
    for (std::uint64_t i = 0; i < skew.size(); ++i) {
      CHECK(skew_pauli_at(n, i) == skew[i]);
    }
  }
  CHECK_THROWS_AS(skew_pauli_at(2, 6), std::invalid_argument);
}

TEST_CASE("odd-Y strings give real skew-symmetric i P") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& p : enumerate_skew_paulis(n)) {
      const MatrixXcd ip = std::complex<double>(0, 1) * to_matrix(p);
      CHECK(max_abs(ip - ip.conjugate()) == 0.0);      // real
      CHECK(max_abs(ip + ip.transpose()) == 0.0);      // skew-symmetric
    }
  }
}
