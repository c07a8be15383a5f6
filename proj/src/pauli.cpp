#include "pauliwalk/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace pauliwalk {

namespace {

constexpr int kMaxQubits = 63;
constexpr int kMaxEnumerationQubits = 12;
// Index arithmetic uses 4^n, so ranked access stops at 31 qubits.
constexpr int kMaxIndexQubits = 31;

void check_qubit_count(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("PauliString: num_qubits must be in [1, 63]");
  }
}

void check_indexable(int n) {
  check_qubit_count(n);
  if (n > kMaxIndexQubits) {
    throw std::invalid_argument(
        "Pauli indexing: 4^n exceeds 64 bits for n > 31");
  }
}

int parity(std::uint64_t v) { return std::popcount(v) & 1; }

}  // namespace

PauliString::PauliString(int n, std::uint64_t x, std::uint64_t z)
    : num_qubits(n), x_bits(x), z_bits(z) {
  check_qubit_count(n);
  const std::uint64_t mask = (n == 64) ? ~0ull : ((1ull << n) - 1);
  if ((x & ~mask) != 0 || (z & ~mask) != 0) {
    throw std::invalid_argument("PauliString: mask bits beyond num_qubits");
  }
}

char PauliString::letter(int j) const {
  const bool x = (x_bits >> j) & 1;
  const bool z = (z_bits >> j) & 1;
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

std::string PauliString::str() const {
  std::string s(num_qubits, 'I');
  for (int j = 0; j < num_qubits; ++j) s[j] = letter(j);
  return s;
}

PauliString PauliString::from_str(const std::string& s) {
  check_qubit_count(static_cast<int>(s.size()));
  PauliString p;
  p.num_qubits = static_cast<int>(s.size());
  for (int j = 0; j < p.num_qubits; ++j) {
    switch (s[j]) {
      case 'I':
        break;
      case 'X':
        p.x_bits |= 1ull << j;
        break;
      case 'Y':
        p.x_bits |= 1ull << j;
        p.z_bits |= 1ull << j;
        break;
      case 'Z':
        p.z_bits |= 1ull << j;
        break;
      default:
        throw std::invalid_argument("PauliString: letters must be I, X, Y, Z");
    }
  }
  return p;
}

int PauliString::weight() const {
  return std::popcount(x_bits | z_bits);
}

std::complex<double> PauliProduct::phase() const {
  switch (phase_exponent & 3) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

std::uint64_t pauli_count(int n) {
  check_indexable(n);
  return (1ull << (2 * n)) - 1;
}

PauliString pauli_at(int n, std::uint64_t index) {
  if (index >= pauli_count(n)) {
    throw std::invalid_argument("pauli_at: index out of range");
  }
  // Letter digits base 4 with I,X,Y,Z = 0..3; qubit 0 is the most
  // significant digit so ascending value is letter-lexicographic order.
  std::uint64_t v = index + 1;
  PauliString p;
  p.num_qubits = n;
  for (int j = n - 1; j >= 0; --j) {
    const int d = static_cast<int>(v & 3);
    v >>= 2;
    if (d == 1 || d == 2) p.x_bits |= 1ull << j;
    if (d == 2 || d == 3) p.z_bits |= 1ull << j;
  }
  return p;
}

std::vector<PauliString> enumerate_paulis(int n) {
  check_qubit_count(n);
  if (n > kMaxEnumerationQubits) {
    throw std::invalid_argument("enumerate_paulis: n > 12 not enumerable");
  }
  const std::uint64_t count = pauli_count(n);
  std::vector<PauliString> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(pauli_at(n, i));
  return out;
}

PauliProduct multiply(const PauliString& a, const PauliString& b) {
  if (a.num_qubits != b.num_qubits) {
    throw std::invalid_argument("multiply: mismatched num_qubits");
  }
  PauliProduct r;
  r.string.num_qubits = a.num_qubits;
  r.string.x_bits = a.x_bits ^ b.x_bits;
  r.string.z_bits = a.z_bits ^ b.z_bits;
  // Per qubit, with the convention letter = i^{xz} X^x Z^z:
  //   i^{xa za} i^{xb zb} X^{xa} Z^{za} X^{xb} Z^{zb}
  //     = i^{xa za + xb zb} (-1)^{za xb} X^{xc} Z^{zc}
  //     = i^{xa za + xb zb - xc zc + 2 za xb} * letter(xc, zc).
  int e = std::popcount(a.x_bits & a.z_bits) +
          std::popcount(b.x_bits & b.z_bits) -
          std::popcount(r.string.x_bits & r.string.z_bits) +
          2 * std::popcount(a.z_bits & b.x_bits);
  r.phase_exponent = ((e % 4) + 4) % 4;
  return r;
}

bool commutes(const PauliString& a, const PauliString& b) {
  if (a.num_qubits != b.num_qubits) {
    throw std::invalid_argument("commutes: mismatched num_qubits");
  }
  return ((parity(a.x_bits & b.z_bits) + parity(a.z_bits & b.x_bits)) & 1) ==
         0;
}

bool y_parity_odd(const PauliString& p) {
  return parity(p.x_bits & p.z_bits) == 1;
}

std::uint64_t skew_pauli_count(int n) {
  check_indexable(n);
  return (1ull << (n - 1)) * ((1ull << n) - 1);
}

PauliString skew_pauli_at(int n, std::uint64_t index) {
  if (index >= skew_pauli_count(n)) {
    throw std::invalid_argument("skew_pauli_at: index out of range");
  }
  // Unrank within the canonical order by counting, per letter position, the
  // number of completions with the required Y parity: a suffix of length m
  // has (4^m - 2^m)/2 odd-parity and (4^m + 2^m)/2 even-parity strings.
  auto completions = [](int m, bool odd) -> std::uint64_t {
    const std::uint64_t four = 1ull << (2 * m);
    const std::uint64_t two = 1ull << m;
    return odd ? (four - two) / 2 : (four + two) / 2;
  };
  PauliString p;
  p.num_qubits = n;
  bool need_odd = true;
  std::uint64_t r = index;
  for (int j = 0; j < n; ++j) {
    const int m = n - 1 - j;
    for (int d = 0; d < 4; ++d) {
      const bool digit_is_y = (d == 2);
      const std::uint64_t block =
          completions(m, digit_is_y ? !need_odd : need_odd);
      if (r < block) {
        if (d == 1 || d == 2) p.x_bits |= 1ull << j;
        if (d == 2 || d == 3) p.z_bits |= 1ull << j;
        if (digit_is_y) need_odd = !need_odd;
        break;
      }
      r -= block;
    }
  }
  return p;
}

std::vector<PauliString> enumerate_skew_paulis(int n) {
  check_qubit_count(n);
  if (n > kMaxEnumerationQubits) {
    throw std::invalid_argument("enumerate_skew_paulis: n > 12 not enumerable");
  }
  std::vector<PauliString> out;
  out.reserve(skew_pauli_count(n));
  const std::uint64_t count = pauli_count(n);
  for (std::uint64_t i = 0; i < count; ++i) {
    PauliString p = pauli_at(n, i);
    if (y_parity_odd(p)) out.push_back(p);
  }
  return out;
}

Eigen::MatrixXcd to_matrix(const PauliString& p, int max_qubits_dense) {
  if (p.num_qubits > max_qubits_dense) {
    throw std::length_error("to_matrix: num_qubits above dense limit");
  }
  const int n = p.num_qubits;
  const Eigen::Index dim = Eigen::Index(1) << n;
  // Index bit of qubit j is (n-1-j): qubit 0 is the most significant bit.
  std::uint64_t x_idx = 0, z_idx = 0;
  for (int j = 0; j < n; ++j) {
    if ((p.x_bits >> j) & 1) x_idx |= 1ull << (n - 1 - j);
    if ((p.z_bits >> j) & 1) z_idx |= 1ull << (n - 1 - j);
  }
  const int num_y = std::popcount(p.x_bits & p.z_bits);
  std::complex<double> y_phase{1.0, 0.0};
  for (int k = 0; k < (num_y & 3); ++k) y_phase *= std::complex<double>(0, 1);

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::uint64_t col = 0; col < static_cast<std::uint64_t>(dim); ++col) {
    const std::uint64_t row = col ^ x_idx;
    const double sign = parity(col & z_idx) ? -1.0 : 1.0;
    m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
        sign * y_phase;
  }
  return m;
}

Eigen::MatrixXcd pauli_rotation_matrix(const PauliString& p, double theta,
                                       int max_qubits_dense) {
  const Eigen::Index dim = Eigen::Index(1) << p.num_qubits;
  Eigen::MatrixXcd m = to_matrix(p, max_qubits_dense);
  return std::cos(theta / 2) * Eigen::MatrixXcd::Identity(dim, dim) +
         std::complex<double>(0, std::sin(theta / 2)) * m;
}

}  // namespace pauliwalk
