#include "pauliwalk/moment.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "pauliwalk/rng.hpp"

namespace pauliwalk {

namespace {

void add_embedded(MatrixXcd& out, const MatrixXcd& op, int slot, int num_slots,
                  std::complex<double> scale) {
  const Eigen::Index n = op.rows();
  const Eigen::Index dim = out.rows();
  Eigen::Index right = 1;
  for (int i = slot + 1; i < num_slots; ++i) right *= n;
  const Eigen::Index stride = right * n;
  for (Eigen::Index base = 0; base < dim; base += stride) {
    for (Eigen::Index r = 0; r < right; ++r) {
      for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index b = 0; b < n; ++b) {
          const std::complex<double> v = op(a, b);
          if (v == std::complex<double>(0, 0)) continue;
          out(base + a * right + r, base + b * right + r) += scale * v;
        }
      }
    }
  }
}

/// Spectral projectors of a Hermitian matrix whose eigenvalues are
/// half-integers: groups by round(2 lambda).
std::vector<std::pair<int, MatrixXcd>> half_integer_spectral_projectors(
    const MatrixXcd& a) {
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(a);
  const VectorXd& ev = es.eigenvalues();
  std::vector<std::pair<int, MatrixXcd>> out;
  Eigen::Index i = 0;
  while (i < ev.size()) {
    const int key = static_cast<int>(std::lround(2.0 * ev(i)));
    Eigen::Index j = i;
    while (j < ev.size() &&
           static_cast<int>(std::lround(2.0 * ev(j))) == key) {
      ++j;
    }
    const auto block = es.eigenvectors().middleCols(i, j - i);
    out.emplace_back(key, block * block.adjoint());
    i = j;
  }
  return out;
}

std::vector<std::vector<int>> all_permutations(int t) {
  std::vector<int> p(t);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int cycle_count(const std::vector<int>& perm) {
  const int t = static_cast<int>(perm.size());
  std::vector<bool> seen(t, false);
  int cycles = 0;
  for (int i = 0; i < t; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return cycles;
}

/// Positions of the N^t unit entries of vec(W_pi) within (C^N)^{2t},
/// kets-then-bras layout: entry (r, c) of W_pi sits at r * N^t + c.
std::vector<Eigen::Index> permutation_vec_positions(const std::vector<int>& pi,
                                                    Eigen::Index N, int t) {
  Eigen::Index block = 1;
  for (int i = 0; i < t; ++i) block *= N;
  std::vector<Eigen::Index> pos(block);
  std::vector<Eigen::Index> cdig(t), rdig(t);
  for (Eigen::Index c = 0; c < block; ++c) {
    Eigen::Index rem = c;
    for (int j = t - 1; j >= 0; --j) {
      cdig[j] = rem % N;
      rem /= N;
    }
    for (int j = 0; j < t; ++j) rdig[pi[j]] = cdig[j];
    Eigen::Index r = 0;
    for (int j = 0; j < t; ++j) r = r * N + rdig[j];
    pos[c] = r * block + c;
  }
  return pos;
}

double su_theorem_bound(int n, int t) {
  const double paulis = std::pow(4.0, n) - 1.0;
  return 1.0 - 1.0 / (4.0 * t) - 1.0 / paulis;
}

std::optional<double> su_small_t_bound(int n, int t) {
  const double N = std::pow(2.0, n);
  if (t > N / 2) return std::nullopt;
  return 1.0 - (1.0 / (2.0 * t)) * N * (N - t + 1.0) / (N * N - 1.0);
}

/// Largest eigenvalue of the PSD matrix b restricted to the orthogonal
/// complement of the image of the commuting projector h.
double largest_eigenvalue_power(const MatrixXcd& b, const MatrixXcd& h,
                                std::string* method) {
  const Eigen::Index dim = b.rows();
  StepRng rng(0x9a7513c5u, static_cast<std::uint64_t>(dim));
  VectorXcd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    v(i) = std::complex<double>(rng.next_normal(), rng.next_normal());
  }
  v -= h * v;
  v.normalize();
  double lambda = 0.0;
  double resid = 1.0;
  const int max_iters = 20000;
  int iter = 0;
  for (; iter < max_iters; ++iter) {
    if (iter % 64 == 0 && iter > 0) v -= h * v;
    VectorXcd w = b * v;
    lambda = std::real(v.dot(w));
    resid = (w - lambda * v).norm();
    if (resid < 1e-11) break;
    v = w / w.norm();
  }
  if (method != nullptr) {
    std::ostringstream os;
    os << "power-iteration(iters=" << iter << ",resid=" << resid << ")";
    *method = os.str();
  }
  return lambda;
}

}  // namespace

Eigen::Index checked_dim(Eigen::Index base, int exp, Eigen::Index limit) {
  Eigen::Index dim = 1;
  for (int i = 0; i < exp; ++i) {
    if (dim > limit / base) {
      throw std::length_error("dimension exceeds the dense limit");
    }
    dim *= base;
  }
  if (dim > limit) throw std::length_error("dimension exceeds the dense limit");
  return dim;
}

MatrixXcd sum_over_slots(const MatrixXcd& gen, int t,
                         Eigen::Index dense_limit) {
  if (t < 1) throw std::invalid_argument("sum_over_slots: t must be >= 1");
  const Eigen::Index dim = checked_dim(gen.rows(), t, dense_limit);
  MatrixXcd out = MatrixXcd::Zero(dim, dim);
  for (int j = 0; j < t; ++j) add_embedded(out, gen, j, t, 1.0);
  return out;
}

MatrixXcd build_tau_star(const PauliString& p, int t,
                         Eigen::Index dense_limit) {
  if (t < 1) throw std::invalid_argument("build_tau_star: t must be >= 1");
  if (p.is_identity()) {
    throw std::invalid_argument("build_tau_star: identity Pauli");
  }
  const Eigen::Index N = Eigen::Index(1) << p.num_qubits;
  const Eigen::Index dim = checked_dim(N, 2 * t, dense_limit);
  const MatrixXcd half = 0.5 * to_matrix(p);
  const MatrixXcd half_conj = half.conjugate();
  MatrixXcd out = MatrixXcd::Zero(dim, dim);
  for (int j = 0; j < t; ++j) {
    add_embedded(out, half, j, 2 * t, 1.0);
    add_embedded(out, half_conj, t + j, 2 * t, -1.0);
  }
  return out;
}

MatrixXcd kernel_projector(const MatrixXcd& h, double zero_threshold) {
  if (!is_hermitian(h)) {
    throw std::invalid_argument("kernel_projector: input is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h);
  const VectorXd& ev = es.eigenvalues();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (std::abs(ev(i)) < zero_threshold) keep.push_back(i);
  }
  MatrixXcd basis(h.rows(), static_cast<Eigen::Index>(keep.size()));
  for (Eigen::Index i = 0; i < basis.cols(); ++i) {
    basis.col(i) = es.eigenvectors().col(keep[i]);
  }
  return basis * basis.adjoint();
}

namespace {

void add_pauli_kernel_projector(MatrixXcd& out, const PauliString& p, int t,
                                double weight) {
  const MatrixXcd ket_block =
      sum_over_slots(0.5 * to_matrix(p), t, Eigen::Index(1) << 24);
  for (const auto& [key, q] : half_integer_spectral_projectors(ket_block)) {
    out += weight * Eigen::kroneckerProduct(q, q.conjugate());
  }
}

}  // namespace

MatrixXcd pauli_kernel_projector(const PauliString& p, int t,
                                 Eigen::Index dense_limit) {
  const Eigen::Index N = Eigen::Index(1) << p.num_qubits;
  const Eigen::Index dim = checked_dim(N, 2 * t, dense_limit);
  MatrixXcd out = MatrixXcd::Zero(dim, dim);
  add_pauli_kernel_projector(out, p, t, 1.0);
  return out;
}

MatrixXcd mean_kernel_projector(int n, int t, Eigen::Index dense_limit) {
  const Eigen::Index dim =
      checked_dim(Eigen::Index(1) << n, 2 * t, dense_limit);
  MatrixXcd out = MatrixXcd::Zero(dim, dim);
  const std::uint64_t count = pauli_count(n);
  for (std::uint64_t i = 0; i < count; ++i) {
    add_pauli_kernel_projector(out, pauli_at(n, i), t,
                               1.0 / static_cast<double>(count));
  }
  return out;
}

MatrixXcd discrete_angle_average(const PauliString& p, int t,
                                 Eigen::Index dense_limit) {
  const Eigen::Index N = Eigen::Index(1) << p.num_qubits;
  const Eigen::Index dim = checked_dim(N, 2 * t, dense_limit);
  MatrixXcd out = MatrixXcd::Zero(dim, dim);
  for (int m = -t; m < t; ++m) {
    const double theta = m * M_PI / t;
    const MatrixXcd ket = kron_power(pauli_rotation_matrix(p, theta), t);
    out += Eigen::kroneckerProduct(ket, ket.conjugate());
  }
  return out / (2.0 * t);
}

double discrete_angle_kernel_defect(const PauliString& p, int t) {
  // Both the angle average and the kernel projector are sums of terms of
  // the form c * A (x) conj(A) with small ket-block factors A, so the entry
  // of the difference at ((r1,r2), (c1,c2)) is
  // sum_i c_i A_i(r1,c1) conj(A_i(r2,c2)). The maximum entry magnitude is
  // found by a chunked rank-m product without forming rep_dim^2 matrices.
  std::vector<double> coeff;
  std::vector<MatrixXcd> block;
  for (int m = -t; m < t; ++m) {
    coeff.push_back(1.0 / (2.0 * t));
    block.push_back(kron_power(pauli_rotation_matrix(p, m * M_PI / t), t));
  }
  const MatrixXcd ket_block = sum_over_slots(0.5 * to_matrix(p), t,
                                             Eigen::Index(1) << 24);
  for (const auto& [key, q] : half_integer_spectral_projectors(ket_block)) {
    coeff.push_back(-1.0);
    block.push_back(q);
  }

  const Eigen::Index terms = static_cast<Eigen::Index>(block.size());
  const Eigen::Index entries = block.front().size();
  MatrixXcd flat(entries, terms);  // column i = A_i flattened
  for (Eigen::Index i = 0; i < terms; ++i) {
    flat.col(i) =
        Eigen::Map<const VectorXcd>(block[i].data(), entries) * coeff[i];
  }
  MatrixXcd flat_raw(entries, terms);
  for (Eigen::Index i = 0; i < terms; ++i) {
    flat_raw.col(i) = Eigen::Map<const VectorXcd>(block[i].data(), entries);
  }

  double defect = 0.0;
  const Eigen::Index chunk = 256;
  for (Eigen::Index r0 = 0; r0 < entries; r0 += chunk) {
    const Eigen::Index rows = std::min(chunk, entries - r0);
    const MatrixXcd piece =
        flat.middleRows(r0, rows) * flat_raw.adjoint();
    defect = std::max(defect, max_abs(piece));
  }
  return defect;
}

MatrixXd permutation_gram(int N, int t) {
  const auto perms = all_permutations(t);
  const int count = static_cast<int>(perms.size());
  MatrixXd gram(count, count);
  std::vector<int> inv(t), composed(t);
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      for (int k = 0; k < t; ++k) inv[perms[j][k]] = k;
      for (int k = 0; k < t; ++k) composed[k] = perms[i][inv[k]];
      gram(i, j) = std::pow(static_cast<double>(N), cycle_count(composed));
    }
  }
  return gram;
}

MatrixXcd haar_projector(int n, int t, Eigen::Index dense_limit) {
  if (t < 1 || t > 6) {
    throw std::invalid_argument("haar_projector: t must be in [1, 6]");
  }
  const Eigen::Index N = Eigen::Index(1) << n;
  const Eigen::Index dim = checked_dim(N, 2 * t, dense_limit);
  const auto perms = all_permutations(t);
  const int count = static_cast<int>(perms.size());

  const MatrixXd gram = permutation_gram(static_cast<int>(N), t);
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(gram);
  const double cutoff = 1e-8 * es.eigenvalues().maxCoeff();
  MatrixXd pinv = MatrixXd::Zero(count, count);
  for (int i = 0; i < count; ++i) {
    const double ev = es.eigenvalues()(i);
    if (ev > cutoff) {
      pinv += (1.0 / ev) * es.eigenvectors().col(i) *
              es.eigenvectors().col(i).transpose();
    }
  }

  std::vector<std::vector<Eigen::Index>> positions;
  positions.reserve(count);
  for (const auto& pi : perms) positions.push_back(
      permutation_vec_positions(pi, N, t));

  // H = W pinv W^dag with W the 0/1 matrix of vectorized permutations;
  // W has only N^t nonzero entries per column.
  MatrixXcd wg = MatrixXcd::Zero(dim, count);
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      const double c = pinv(i, j);
      if (c == 0.0) continue;
      for (const Eigen::Index pos : positions[i]) wg(pos, j) += c;
    }
  }
  MatrixXcd h = MatrixXcd::Zero(dim, dim);
  for (int j = 0; j < count; ++j) {
    for (const Eigen::Index pos : positions[j]) {
      h.col(pos) += wg.col(j);
    }
  }
  return h;
}

GapReport spectral_gap_report(int n, int t, Eigen::Index dense_limit) {
  if (n < 1 || t < 1) {
    throw std::invalid_argument("spectral_gap_report: n, t must be >= 1");
  }
  const Eigen::Index N = Eigen::Index(1) << n;
  const Eigen::Index dim = checked_dim(N, 2 * t, dense_limit);

  const MatrixXcd m = mean_kernel_projector(n, t, dense_limit);
  const MatrixXcd h = haar_projector(n, t, dense_limit);

  GapReport report;
  report.group = "su";
  report.generator_set = "full_pauli";
  report.num_qubits = n;
  report.matrix_dim = static_cast<int>(N);
  report.t = t;
  report.rep_dim = dim;
  report.trivial_dim = static_cast<int>(std::lround(std::real(h.trace())));
  report.theorem_bound = su_theorem_bound(n, t);
  report.improved_bound = su_small_t_bound(n, t);

  const MatrixXcd diff = m - h;
  if (dim <= 1024) {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(diff);
    report.gap_norm = es.eigenvalues().maxCoeff();
    report.method = "dense-eigensolver";
  } else {
    report.gap_norm = largest_eigenvalue_power(diff, h, &report.method);
  }

  if (report.gap_norm > report.theorem_bound + report.tol) {
    std::ostringstream os;
    os << "violated inequality gap_norm <= 1 - 1/(4t) - 1/(4^n - 1): "
       << report.gap_norm << " > " << report.theorem_bound;
    throw std::runtime_error(os.str());
  }
  return report;
}

MatrixXd elementary_generator(int a, int b, int N) {
  if (a < 0 || b < 0 || a >= N || b >= N || a == b) {
    throw std::invalid_argument("elementary_generator: bad indices");
  }
  MatrixXd e = MatrixXd::Zero(N, N);
  e(a, b) = 1.0;
  e(b, a) = -1.0;
  return e;
}

GapReport orthogonal_moment_gap(int N, int t, OrthoBasis basis,
                                Eigen::Index dense_limit) {
  if (t < 1) throw std::invalid_argument("orthogonal_moment_gap: t >= 1");
  GapReport report;
  report.group = "so";
  report.matrix_dim = N;
  report.t = t;

  std::vector<MatrixXcd> generators;  // Hermitian, half-integer spectrum
  if (basis == OrthoBasis::skew_pauli) {
    int n = 0;
    while ((1 << n) < N) ++n;
    if ((1 << n) != N || N <= 4) {
      throw std::invalid_argument(
          "orthogonal_moment_gap: skew_pauli requires N = 2^n > 4");
    }
    report.generator_set = "skew_pauli";
    report.num_qubits = n;
    const std::uint64_t count = skew_pauli_count(n);
    for (std::uint64_t i = 0; i < count; ++i) {
      generators.push_back(0.5 * to_matrix(skew_pauli_at(n, i)));
    }
    report.theorem_bound = 1.0 -
                           (1.0 / (2.0 * t)) * (N - 2.0) / (N - 1.0) -
                           2.0 / (static_cast<double>(N) * (N - 1.0));
  } else {
    if (N < 3) {
      throw std::invalid_argument(
          "orthogonal_moment_gap: elementary requires N >= 3");
    }
    report.generator_set = "elementary";
    const std::complex<double> minus_i(0.0, -1.0);
    for (int a = 0; a < N; ++a) {
      for (int b = a + 1; b < N; ++b) {
        generators.push_back(minus_i *
                             elementary_generator(a, b, N).cast<std::complex<double>>());
      }
    }
    report.theorem_bound = 1.0 -
                           (1.0 / t) * 2.0 * (N - 2.0) /
                               (static_cast<double>(N) * (N - 1.0)) -
                           2.0 / (static_cast<double>(N) * (N - 1.0));
  }

  const Eigen::Index dim = checked_dim(N, t, dense_limit);
  report.rep_dim = dim;
  MatrixXcd mean = MatrixXcd::Zero(dim, dim);
  for (const MatrixXcd& gen : generators) {
    mean += kernel_projector(sum_over_slots(gen, t, dense_limit), 0.25);
  }
  mean /= static_cast<double>(generators.size());

  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(mean);
  const double threshold = 1.0 - 1e-9;
  int trivial = 0;
  double gap = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double ev = es.eigenvalues()(i);
    if (ev >= threshold) {
      ++trivial;
    } else {
      gap = std::max(gap, ev);
    }
  }
  report.trivial_dim = trivial;
  report.gap_norm = gap;
  report.method = "dense-eigensolver";

  if (report.gap_norm > report.theorem_bound + report.tol) {
    std::ostringstream os;
    os << "violated inequality gap_norm <= orthogonal theorem bound ("
       << report.generator_set << "): " << report.gap_norm << " > "
       << report.theorem_bound;
    throw std::runtime_error(os.str());
  }
  return report;
}

}  // namespace pauliwalk
