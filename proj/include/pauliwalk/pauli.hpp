#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace pauliwalk {

/// An n-qubit Pauli operator stored as two bit masks. Bit j of x_bits /
/// z_bits is the X / Z component on qubit j; (0,0)=1, (1,0)=X, (0,1)=Z,
/// (1,1)=Y. Qubit 0 is the leftmost letter in the string form and the most
/// significant tensor factor in the matrix form.
struct PauliString {
  int num_qubits = 0;
  std::uint64_t x_bits = 0;
  std::uint64_t z_bits = 0;

  PauliString() = default;
  PauliString(int n, std::uint64_t x, std::uint64_t z);

  bool is_identity() const { return x_bits == 0 && z_bits == 0; }

  /// Letter on qubit j, one of 'I','X','Y','Z'.
  char letter(int j) const;

  /// Letter-string form, leftmost letter = qubit 0 (e.g. "XZXZXXXZ").
  std::string str() const;
  static PauliString from_str(const std::string& s);

  /// Number of non-identity tensor factors.
  int weight() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
};

/// Result of multiplying two Pauli strings: phase * string with
/// phase = i^phase_exponent a fourth root of unity.
struct PauliProduct {
  int phase_exponent = 0;  // in {0,1,2,3}
  PauliString string;

  std::complex<double> phase() const;
};

/// All 4^n - 1 nonidentity Pauli strings in canonical order: lexicographic
/// on the letter string with I < X < Y < Z (so n=1 gives X, Y, Z).
std::vector<PauliString> enumerate_paulis(int n);

/// Element at position `index` of enumerate_paulis(n), without materializing
/// the list.
PauliString pauli_at(int n, std::uint64_t index);

/// Number of elements of the canonical enumeration: 4^n - 1.
std::uint64_t pauli_count(int n);

PauliProduct multiply(const PauliString& a, const PauliString& b);

/// True iff a and b commute (symplectic form x_a.z_b + z_a.x_b is even).
bool commutes(const PauliString& a, const PauliString& b);

/// Parity of the number of Y tensor factors. Odd parity means i*P is a real
/// skew-symmetric matrix.
bool y_parity_odd(const PauliString& p);

/// The subset of enumerate_paulis(n) with an odd number of Y factors, in the
/// same canonical order; has 2^{n-1} (2^n - 1) elements.
std::vector<PauliString> enumerate_skew_paulis(int n);

/// Element at position `index` of enumerate_skew_paulis(n) in O(n) time.
PauliString skew_pauli_at(int n, std::uint64_t index);

/// Number of Pauli strings with odd Y parity: 2^{n-1} (2^n - 1).
std::uint64_t skew_pauli_count(int n);

/// Dense 2^n x 2^n matrix of p. Hermitian, unitary, traceless.
Eigen::MatrixXcd to_matrix(const PauliString& p, int max_qubits_dense = 12);

/// exp(i theta P / 2) = cos(theta/2) 1 + i sin(theta/2) P, dense.
Eigen::MatrixXcd pauli_rotation_matrix(const PauliString& p, double theta,
                                       int max_qubits_dense = 12);

}  // namespace pauliwalk
