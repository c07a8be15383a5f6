#include "pauliwalk/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

#include "pauliwalk/casimir.hpp"
#include "pauliwalk/circuit.hpp"
#include "pauliwalk/moment.hpp"
#include "pauliwalk/ortho.hpp"
#include "pauliwalk/pauli.hpp"
#include "pauliwalk/rng.hpp"
#include "pauliwalk/sampler.hpp"
#include "pauliwalk/state_design.hpp"
#include "pauliwalk/su2.hpp"

namespace pauliwalk {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::runtime_error(message);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

MatrixXcd dense_exponential_oracle(const PauliString& p, double theta) {
  const MatrixXcd h = std::complex<double>(0.0, theta / 2.0) * to_matrix(p);
  return h.exp();
}

ConnectivityGraph random_connected_graph(int n, StepRng& rng) {
  if (n == 1) return ConnectivityGraph(1, {});
  std::set<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    edges.emplace(static_cast<int>(rng.next_below(v)), v);
  }
  const int extras = static_cast<int>(rng.next_below(n));
  for (int e = 0; e < extras; ++e) {
    int u = static_cast<int>(rng.next_below(n));
    int v = static_cast<int>(rng.next_below(n));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    edges.emplace(u, v);
  }
  return ConnectivityGraph(n, {edges.begin(), edges.end()});
}

void apply_tau_slotwise(const PauliString& p, int t, const VectorXcd& in,
                        VectorXcd& out) {
  const Eigen::Index n_dim = Eigen::Index(1) << p.num_qubits;
  const MatrixXcd half = 0.5 * to_matrix(p);
  const MatrixXcd half_conj = half.conjugate();
  const Eigen::Index dim = in.size();
  out = VectorXcd::Zero(dim);
  for (int slot = 0; slot < 2 * t; ++slot) {
    const MatrixXcd& op = slot < t ? half : half_conj;
    const double sign = slot < t ? 1.0 : -1.0;
    Eigen::Index right = 1;
    for (int i = slot + 1; i < 2 * t; ++i) right *= n_dim;
    const Eigen::Index stride = right * n_dim;
    for (Eigen::Index base = 0; base < dim; base += stride) {
      for (Eigen::Index r = 0; r < right; ++r) {
        for (Eigen::Index a = 0; a < n_dim; ++a) {
          std::complex<double> acc = 0.0;
          for (Eigen::Index b = 0; b < n_dim; ++b) {
            acc += op(a, b) * in(base + b * right + r);
          }
          out(base + a * right + r) += sign * acc;
        }
      }
    }
  }
}

// --- criterion 1 ---------------------------------------------------------
std::string check_su2_exact_gaps() {
  const double expected[4] = {4.0 / 12, 6.0 / 12, 6.0 / 12, 7.0 / 12};
  std::ostringstream detail;
  for (int t = 1; t <= 4; ++t) {
    const GapReport report = spectral_gap_report(1, t);
    require(std::abs(report.gap_norm - expected[t - 1]) <= 1e-9,
            "gap(1," + std::to_string(t) + ") = " + fmt(report.gap_norm) +
                " != " + fmt(expected[t - 1]));
    require(std::abs(su2_design_gap(t) - report.gap_norm) <= 1e-9,
            "closed form disagrees with the moment engine at t=" +
                std::to_string(t));
    detail << "gap(1," << t << ")=" << fmt(report.gap_norm) << " ";
  }
  return detail.str();
}

// --- criterion 2 ---------------------------------------------------------
std::string check_kernel_overlap_oracle() {
  for (int ell = 1; ell <= 8; ++ell) {
    const SpinIrrep irrep = build_spin_irrep(ell);
    const VectorXcd x = kernel_vector(irrep.Jx);
    const VectorXcd y = kernel_vector(irrep.Jy);
    const VectorXcd z = kernel_vector(irrep.Jz);
    const std::complex<double> xy = x.dot(y);
    const std::complex<double> yz = y.dot(z);
    const std::complex<double> zx = z.dot(x);
    const double f = kernel_overlap(ell);
    if (ell % 2 == 1) {
      require(std::abs(xy) <= 1e-10 && std::abs(yz) <= 1e-10 &&
                  std::abs(zx) <= 1e-10,
              "odd ell=" + std::to_string(ell) + " overlaps not zero");
    } else {
      const std::complex<double> triple = xy * yz * zx;
      require(std::abs(triple.imag()) <= 1e-10,
              "triple overlap not real at ell=" + std::to_string(ell));
      const double f_num = std::cbrt(triple.real());
      require(std::abs(f_num - f) <= 1e-10,
              "ell=" + std::to_string(ell) + ": oracle f=" + fmt(f_num) +
                  " vs closed form " + fmt(f));
    }
  }
  return "f reproduced for ell=1..8";
}

// --- criterion 3 ---------------------------------------------------------
std::string check_theorem_bounds() {
  // The (2,3) case at dimension 4096 runs as its own slow check.
  const std::vector<std::pair<int, int>> cases = {{1, 1}, {1, 2}, {1, 3},
                                                  {1, 4}, {2, 1}, {2, 2},
                                                  {3, 1}};
  std::ostringstream detail;
  for (const auto& [n, t] : cases) {
    const GapReport report = spectral_gap_report(n, t);
    require(report.gap_norm <= report.theorem_bound + 1e-9,
            "main bound violated at n=" + std::to_string(n) +
                ", t=" + std::to_string(t));
    if (report.improved_bound.has_value()) {
      require(report.gap_norm <= *report.improved_bound + 1e-9,
              "small-t bound violated at n=" + std::to_string(n) +
                  ", t=" + std::to_string(t));
    }
    const GapBound closed = gap_bound(n, t);
    require(report.gap_norm <= closed.main + 1e-9,
            "Casimir main bound violated at n=" + std::to_string(n));
    detail << "(" << n << "," << t << "): " << fmt(report.gap_norm)
           << " <= " << fmt(report.theorem_bound) << "; ";
  }
  require(std::abs(gap_bound(2, 2).small_t.value() - 0.8) <= 1e-12,
          "small-t bound at (2,2) is not 0.8");
  return detail.str();
}

// --- criterion 4 ---------------------------------------------------------
std::string check_integer_spectrum() {
  // Dense route wherever the full eigensolver is cheap.
  for (const auto& [n, t] : std::vector<std::pair<int, int>>{
           {1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}}) {
    for (const PauliString& p : enumerate_paulis(n)) {
      const MatrixXcd tau = build_tau_star(p, t);
      Eigen::SelfAdjointEigenSolver<MatrixXcd> es(tau,
                                                  Eigen::EigenvaluesOnly);
      std::set<int> present;
      for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double ev = es.eigenvalues()(i);
        const int rounded = static_cast<int>(std::lround(ev));
        require(std::abs(ev - rounded) <= 1e-9 && std::abs(rounded) <= t,
                "non-integer eigenvalue " + fmt(ev) + " at n=" +
                    std::to_string(n) + ", t=" + std::to_string(t));
        present.insert(rounded);
      }
      require(static_cast<int>(present.size()) == 2 * t + 1,
              "missing integer eigenvalue at n=" + std::to_string(n) +
                  ", t=" + std::to_string(t));
    }
  }

  // (n=2, t=3) at dimension 4096: the built operator is block-structured as
  // (ket sum) - (bra sum), so its spectrum is the difference set of the
  // 64-dimensional ket-block spectrum; the dense matrix itself is checked
  // against the slot-structured action on probe vectors.
  const int t = 3;
  StepRng rng(0x51ec7254u, 23);
  for (const PauliString& p : enumerate_paulis(2)) {
    const MatrixXcd ket_block = sum_over_slots(0.5 * to_matrix(p), t);
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(ket_block,
                                                Eigen::EigenvaluesOnly);
    std::set<int> present;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      for (Eigen::Index j = 0; j < es.eigenvalues().size(); ++j) {
        const double d = es.eigenvalues()(i) - es.eigenvalues()(j);
        const int rounded = static_cast<int>(std::lround(d));
        require(std::abs(d - rounded) <= 1e-9 && std::abs(rounded) <= t,
                "non-integer eigenvalue at (2,3): " + fmt(d));
        present.insert(rounded);
      }
    }
    require(static_cast<int>(present.size()) == 2 * t + 1,
            "missing integer eigenvalue at (2,3)");

    const MatrixXcd tau = build_tau_star(p, t);
    for (int probe = 0; probe < 2; ++probe) {
      VectorXcd v(tau.rows());
      for (Eigen::Index i = 0; i < v.size(); ++i) {
        v(i) = std::complex<double>(rng.next_normal(), rng.next_normal());
      }
      v.normalize();
      VectorXcd structured;
      apply_tau_slotwise(p, t, v, structured);
      require((tau * v - structured).norm() <= 1e-10,
              "built tau disagrees with the slot-structured action at (2,3)");
      require((tau * v - tau.adjoint() * v).norm() <= 1e-10,
              "built tau not Hermitian on probe at (2,3)");
    }
  }
  return "integer spectra verified for n <= 2, t <= 3";
}

// --- criterion 5 ---------------------------------------------------------
std::string check_discrete_angles() {
  double worst = 0.0;
  for (int n = 1; n <= 2; ++n) {
    for (int t = 1; t <= 3; ++t) {
      for (const PauliString& p : enumerate_paulis(n)) {
        worst = std::max(worst, discrete_angle_kernel_defect(p, t));
      }
    }
  }
  require(worst <= 1e-12,
          "discrete-angle average deviates from the kernel projector by " +
              fmt(worst));
  // Dense spot check of the same identity against the generic eigensolver
  // route at small dimension.
  for (const PauliString& p : enumerate_paulis(1)) {
    const MatrixXcd avg = discrete_angle_average(p, 2);
    const MatrixXcd kp = kernel_projector(build_tau_star(p, 2));
    require(max_abs(avg - kp) <= 1e-12, "dense discrete-angle check failed");
  }
  return "max entry deviation " + fmt(worst);
}

// --- criterion 6 ---------------------------------------------------------
std::string check_circuit_compiler() {
  StepRng rng(0xc1ec0117u, 6);
  int swap_cases = 0;
  for (int c = 0; c < 200; ++c) {
    const int n = 1 + static_cast<int>(rng.next_below(6));
    const PauliString p = pauli_at(n, rng.next_below(pauli_count(n)));
    const double theta = rng.next_symmetric(M_PI);
    const ConnectivityGraph graph = random_connected_graph(n, rng);
    const CompiledCircuit circuit = compile_spanning_tree(p, theta, graph);

    require(circuit.count_rx() == 1, "spanning-tree: RX count != 1");
    require(circuit.count_one_qubit_clifford() <= 2 * n,
            "spanning-tree: more than 2n one-qubit Clifford gates");
    require(circuit.count_two_qubit() <= std::max(0, 2 * n - 2),
            "spanning-tree: more than 2n-2 CNOT/SWAP gates");
    circuit.check_layers_valid();

    std::set<std::pair<int, int>> allowed;
    for (auto [u, v] : graph.edges) allowed.emplace(u, v);
    for (const Gate& g : circuit.gates) {
      if (!g.is_two_qubit()) continue;
      auto edge = std::minmax(g.q0, g.q1);
      require(allowed.count({edge.first, edge.second}) > 0,
              "spanning-tree: two-qubit gate off the coupling graph");
      swap_cases += g.kind == GateKind::Swap ? 1 : 0;
    }

    const MatrixXcd u = circuit_to_unitary(circuit);
    require(max_abs(u - dense_exponential_oracle(p, theta)) <= 1e-10,
            "spanning-tree: circuit unitary mismatch at case " +
                std::to_string(c));
  }

  // Log-depth construction: depth bound for n <= 10, unitary for n <= 6
  // and for the 8-qubit all-to-all example string.
  for (int n = 2; n <= 10; ++n) {
    for (int c = 0; c < 3; ++c) {
      const PauliString p = pauli_at(n, rng.next_below(pauli_count(n)));
      const double theta = rng.next_symmetric(M_PI);
      const CompiledCircuit circuit = compile_log_depth(p, theta);
      const int w = p.weight();
      const int bound =
          2 * static_cast<int>(std::ceil(std::log2(std::max(1, w)))) + 3;
      require(circuit.depth() <= bound, "log-depth: depth above bound");
      circuit.check_layers_valid();
      if (n <= 6) {
        const MatrixXcd u = circuit_to_unitary(circuit);
        require(max_abs(u - dense_exponential_oracle(p, theta)) <= 1e-10,
                "log-depth: circuit unitary mismatch");
      }
    }
  }
  {
    const PauliString p = PauliString::from_str("XZXZXXXZ");
    const CompiledCircuit circuit = compile_log_depth(p, 0.7);
    require(circuit.depth() <= 9, "log-depth: example string depth above 9");
    require(max_abs(circuit_to_unitary(circuit) -
                    dense_exponential_oracle(p, 0.7)) <= 1e-10,
            "log-depth: example string unitary mismatch");
  }
  // theta = 0 compiles to the identity.
  {
    const PauliString p = PauliString::from_str("XYZ");
    const MatrixXcd u =
        circuit_to_unitary(compile_spanning_tree(p, 0.0,
                                                 ConnectivityGraph::path(3)));
    require(max_abs(u - MatrixXcd::Identity(8, 8)) <= 1e-12,
            "theta=0 circuit is not the identity");
  }
  return "200 graph cases + log-depth cases (" + std::to_string(swap_cases) +
         " SWAPs exercised)";
}

// --- criterion 7 ---------------------------------------------------------
std::string check_casimir_invariance() {
  std::ostringstream detail;
  for (const auto& [n, t] : std::vector<std::pair<int, int>>{
           {1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
    const int N = 1 << n;
    std::vector<MatrixXcd> taus;
    for (const PauliString& p : enumerate_paulis(n)) {
      taus.push_back(build_tau_star(p, t));
    }
    const Eigen::Index dim = taus.front().rows();
    MatrixXcd casimir = MatrixXcd::Zero(dim, dim);
    for (const MatrixXcd& tau : taus) casimir += tau * tau;

    for (const MatrixXcd& tau : taus) {
      require(max_abs(casimir * tau - tau * casimir) <= 1e-9,
              "Casimir sum does not commute at n=" + std::to_string(n) +
                  ", t=" + std::to_string(t));
    }

    // Per-block scalar against the closed-form bounds: blocks are the
    // eigenspaces of the Casimir sum, and ell is read off the restricted
    // generator.
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(casimir);
    Eigen::Index i = 0;
    while (i < dim) {
      const double scalar = es.eigenvalues()(i);
      Eigen::Index j = i;
      while (j < dim && es.eigenvalues()(j) - scalar < 1e-6) ++j;
      if (scalar > 1e-8) {
        const auto basis = es.eigenvectors().middleCols(i, j - i);
        const MatrixXcd restricted = basis.adjoint() * taus[0] * basis;
        Eigen::SelfAdjointEigenSolver<MatrixXcd> res(restricted,
                                                     Eigen::EigenvaluesOnly);
        const double ell = res.eigenvalues().cwiseAbs().maxCoeff();
        require(std::abs(ell - std::lround(ell)) <= 1e-9,
                "block norm ell is not an integer");
        require(scalar >= casimir_lower_bound(N, ell) - 1e-7,
                "Casimir scalar below the lower bound: " + fmt(scalar));
        require(scalar <= casimir_upper_bound(N, ell) + 1e-7,
                "Casimir scalar above the upper bound: " + fmt(scalar));
      }
      i = j;
    }
    detail << "(" << n << "," << t << ") ok; ";
  }
  return detail.str();
}

// --- criterion 8 ---------------------------------------------------------
std::string check_orthogonal_designs() {
  std::ostringstream detail;
  for (int t : {1, 2}) {
    const GapReport report = orthogonal_moment_gap(8, t, OrthoBasis::skew_pauli);
    require(report.gap_norm <= report.theorem_bound + 1e-9,
            "skew-Pauli bound violated at t=" + std::to_string(t));
    detail << "skew(8," << t << ")=" << fmt(report.gap_norm) << "; ";
  }
  for (int N : {3, 4, 5}) {
    for (int t : {1, 2}) {
      const GapReport report =
          orthogonal_moment_gap(N, t, OrthoBasis::elementary);
      require(report.gap_norm <= report.theorem_bound + 1e-9,
              "elementary bound violated at N=" + std::to_string(N));
      if (N == 3 && t == 1) {
        require(std::abs(report.gap_norm - 1.0 / 3.0) <= 1e-9,
                "elementary N=3, t=1 gap is not 1/3: " + fmt(report.gap_norm));
      }
    }
  }
  for (int n = 1; n <= 10; ++n) {
    const std::uint64_t expected =
        (1ull << (n - 1)) * ((1ull << n) - 1);
    require(skew_pauli_count(n) == expected, "skew count formula mismatch");
    if (n <= 10) {
      std::uint64_t counted = 0;
      const std::uint64_t total = pauli_count(n);
      for (std::uint64_t i = 0; i < total; ++i) {
        counted += y_parity_odd(pauli_at(n, i)) ? 1 : 0;
      }
      require(counted == expected,
              "enumerated |Y_n| mismatch at n=" + std::to_string(n));
    }
  }
  return detail.str() + "|Y_n| verified for n=1..10";
}

// --- criterion 9 ---------------------------------------------------------
std::string check_state_designs() {
  std::ostringstream detail;
  for (int t : {1, 2}) {
    const VectorXcd alpha = random_state(2, 7);
    for (int k = 0; k <= 10; ++k) {
      const StateDesignResult r = state_design_distance(1, t, k, alpha);
      require(r.distance <= r.bound + 1e-8, "state-design bound violated");
      if (t == 1 && k == 0) {
        VectorXcd e0 = VectorXcd::Zero(2);
        e0(0) = 1.0;
        const StateDesignResult r0 = state_design_distance(1, 1, 0, e0);
        require(std::abs(r0.distance - 1.0) <= 1e-12,
                "k=0 distance for |0> is not 1: " + fmt(r0.distance));
      }
    }
    detail << "(N=2,t=" << t << ") ok; ";
  }
  const VectorXcd alpha = random_state(4, 11);
  for (int k : {0, 1, 3, 5}) {
    const StateDesignResult r = state_design_distance(2, 2, k, alpha);
    require(r.distance <= r.bound + 1e-8,
            "state-design bound violated at N=4, t=2, k=" + std::to_string(k));
    if (k == 5) detail << "(N=4,t=2,k=5): " << fmt(r.distance) << " <= "
                       << fmt(r.bound);
  }
  return detail.str();
}

// --- criterion 10 --------------------------------------------------------
std::string check_fast_orthogonal_sampler() {
  // Orthogonality and operation count after 1e5 Givens steps at N = 64.
  {
    OrthoSamplerConfig cfg{64, 100000, GeneratorKind::elementary, 5};
    std::uint64_t ops = 0;
    const MatrixXd o = sample_orthogonal(cfg, &ops);
    require(ops == 100000ull * givens_op_count(64),
            "operation count is not 6 N k");
    const double defect =
        (o.transpose() * o - MatrixXd::Identity(64, 64)).norm();
    require(defect <= 1e-10,
            "orthogonality defect after 1e5 steps: " + fmt(defect));
  }

  // First-moment contraction at N = 3: the empirical mean over 1e5 samples
  // after k steps matches 3^{-k} I within five standard errors.
  const int samples = 100000;
  std::ostringstream detail;
  for (int k : {1, 2, 4}) {
    MatrixXd sum = MatrixXd::Zero(3, 3);
    MatrixXd sumsq = MatrixXd::Zero(3, 3);
    for (int s = 0; s < samples; ++s) {
      OrthoSamplerConfig cfg{3, k, GeneratorKind::elementary,
                             0xa0000u + static_cast<std::uint64_t>(s)};
      const MatrixXd o = sample_orthogonal(cfg);
      sum += o;
      sumsq += o.cwiseProduct(o);
    }
    const MatrixXd mean = sum / samples;
    const MatrixXd target =
        std::pow(1.0 / 3.0, k) * MatrixXd::Identity(3, 3);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const double var =
            (sumsq(i, j) / samples - mean(i, j) * mean(i, j)) / samples;
        const double se = std::sqrt(std::max(var, 1e-30));
        require(std::abs(mean(i, j) - target(i, j)) <= 5.0 * se,
                "first moment off the 1/3-per-step contraction at k=" +
                    std::to_string(k));
      }
    }
    detail << "k=" << k << ": |mean-3^-k I|max = "
           << fmt((mean - target).cwiseAbs().maxCoeff()) << "; ";
  }
  return detail.str();
}

// --- slow checks ----------------------------------------------------------

MatrixXcd haar_unitary(int dim, StepRng& rng) {
  MatrixXcd g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      g(i, j) = std::complex<double>(rng.next_normal(), rng.next_normal());
    }
  }
  Eigen::HouseholderQR<MatrixXcd> qr(g);
  MatrixXcd q = qr.householderQ();
  const MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const std::complex<double> d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

std::string check_mc_haar_projector() {
  StepRng rng(0xaaaa1111u, 0);
  for (int t : {1, 2}) {
    const Eigen::Index dim = Eigen::Index(1) << (2 * t);
    MatrixXcd avg = MatrixXcd::Zero(dim, dim);
    const int samples = 20000;
    for (int s = 0; s < samples; ++s) {
      const MatrixXcd u = haar_unitary(2, rng);
      avg += kron(kron_power(u, t), kron_power(u.conjugate(), t));
    }
    avg /= samples;
    const double deviation = max_abs(avg - haar_projector(1, t));
    require(deviation <= 5e-2,
            "Monte Carlo Haar average off by " + fmt(deviation) +
                " at t=" + std::to_string(t));
  }
  return "20000-sample Haar averages match the Gram construction";
}

std::string check_mc_state_moment() {
  for (const auto& [N, t] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2},
                                                             {4, 2}}) {
    const SymmetricSpace sym = build_symmetric_space(N, t);
    MatrixXcd avg = MatrixXcd::Zero(sym.dim, sym.dim);
    const int samples = 20000;
    for (int s = 0; s < samples; ++s) {
      avg += symmetric_pure_power(
          sym, random_state(N, 0xbeef00ull + static_cast<std::uint64_t>(s)));
    }
    avg /= samples;
    const double deviation = max_abs(avg - haar_state_moment(N, t));
    require(deviation <= 5e-2, "Monte Carlo state moment off by " +
                                   fmt(deviation));
  }
  return "20000-sample state moments match identity/dim";
}

std::string check_gap_2_3() {
  const GapReport report = spectral_gap_report(2, 3);
  require(report.gap_norm <= report.theorem_bound + 1e-9,
          "main bound violated at (2,3)");
  return "gap(2,3)=" + fmt(report.gap_norm) + " <= " +
         fmt(report.theorem_bound) + " [" + report.method + "]";
}

std::string check_ortho_two_sample() {
  // Compare E[tr O] between the Givens walk (driven far past mixing) and
  // the QR-based Haar sampler at matching sample counts.
  const int samples = 20000;
  const int N = 3;
  double sum_walk = 0.0, sumsq_walk = 0.0, sum_gs = 0.0, sumsq_gs = 0.0;
  for (int s = 0; s < samples; ++s) {
    OrthoSamplerConfig cfg{N, 40, GeneratorKind::elementary,
                           0xccc000ull + static_cast<std::uint64_t>(s)};
    const double tw = sample_orthogonal(cfg).trace();
    sum_walk += tw;
    sumsq_walk += tw * tw;
    const double tg =
        gram_schmidt_haar(N, 0xddd000ull + static_cast<std::uint64_t>(s))
            .trace();
    sum_gs += tg;
    sumsq_gs += tg * tg;
  }
  const double mean_walk = sum_walk / samples;
  const double mean_gs = sum_gs / samples;
  const double var_walk = sumsq_walk / samples - mean_walk * mean_walk;
  const double var_gs = sumsq_gs / samples - mean_gs * mean_gs;
  const double se = std::sqrt((var_walk + var_gs) / samples);
  require(std::abs(mean_walk - mean_gs) <= 5.0 * se,
          "two-sample trace means differ: " + fmt(mean_walk) + " vs " +
              fmt(mean_gs));
  return "E[tr O]: walk " + fmt(mean_walk) + ", QR " + fmt(mean_gs);
}

}  // namespace

std::vector<CheckResult> run_acceptance_checks(VerifyScale scale) {
  using Clock = std::chrono::steady_clock;
  std::vector<std::pair<std::string, std::function<std::string()>>> checks = {
      {"criterion-01-su2-exact-gap-values", check_su2_exact_gaps},
      {"criterion-02-kernel-overlap-oracle", check_kernel_overlap_oracle},
      {"criterion-03-theorem-gap-bounds", check_theorem_bounds},
      {"criterion-04-integer-spectrum", check_integer_spectrum},
      {"criterion-05-discrete-angle-identity", check_discrete_angles},
      {"criterion-06-circuit-compiler", check_circuit_compiler},
      {"criterion-07-casimir-invariance", check_casimir_invariance},
      {"criterion-08-orthogonal-designs", check_orthogonal_designs},
      {"criterion-09-state-designs", check_state_designs},
      {"criterion-10-fast-orthogonal-sampler", check_fast_orthogonal_sampler},
  };
  if (scale == VerifyScale::slow) {
    checks.emplace_back("slow-mc-haar-projector", check_mc_haar_projector);
    checks.emplace_back("slow-mc-state-moment", check_mc_state_moment);
    checks.emplace_back("slow-gap-n2-t3", check_gap_2_3);
    checks.emplace_back("slow-ortho-two-sample", check_ortho_two_sample);
  }

  std::vector<CheckResult> results;
  for (auto& [name, fn] : checks) {
    CheckResult result;
    result.name = name;
    const auto start = Clock::now();
    try {
      result.detail = fn();
      result.passed = true;
    } catch (const std::exception& e) {
      result.passed = false;
      result.detail = e.what();
    }
    result.seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace pauliwalk
