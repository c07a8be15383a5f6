#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "pauliwalk/linalg.hpp"
#include "pauliwalk/pauli.hpp"

namespace pauliwalk {

/// Undirected simple connected graph of allowed two-qubit couplings.
struct ConnectivityGraph {
  int num_qubits = 0;
  std::vector<std::pair<int, int>> edges;

  ConnectivityGraph() = default;
  ConnectivityGraph(int n, std::vector<std::pair<int, int>> edge_list);

  static ConnectivityGraph complete(int n);
  static ConnectivityGraph path(int n);

  /// Edge-list format: first line "n <num_qubits>", then "u v" per line.
  static ConnectivityGraph parse(std::istream& in);
  std::string str() const;

  std::vector<std::vector<int>> adjacency() const;
  bool is_connected() const;
};

enum class GateKind { H, S, Sdg, Cnot, Swap, Rx };

/// One gate. q1 is unused for 1-qubit kinds; theta only for Rx, which is the
/// rotation exp(i theta X / 2).
struct Gate {
  GateKind kind = GateKind::H;
  int q0 = 0;
  int q1 = -1;
  double theta = 0.0;

  static Gate h(int q) { return {GateKind::H, q, -1, 0.0}; }
  static Gate s(int q) { return {GateKind::S, q, -1, 0.0}; }
  static Gate sdg(int q) { return {GateKind::Sdg, q, -1, 0.0}; }
  static Gate cnot(int control, int target) {
    return {GateKind::Cnot, control, target, 0.0};
  }
  static Gate swap(int a, int b) { return {GateKind::Swap, a, b, 0.0}; }
  static Gate rx(double theta, int q) { return {GateKind::Rx, q, -1, theta}; }

  bool is_two_qubit() const {
    return kind == GateKind::Cnot || kind == GateKind::Swap;
  }
};

/// Ordered gate list partitioned into parallel layers: layer_offsets[i] is
/// the index of the first gate of layer i, and gates within a layer act on
/// disjoint qubits.
struct CompiledCircuit {
  int num_qubits = 0;
  std::vector<Gate> gates;
  std::vector<std::size_t> layer_offsets;

  int depth() const { return static_cast<int>(layer_offsets.size()); }
  std::size_t layer_begin(int layer) const { return layer_offsets[layer]; }
  std::size_t layer_end(int layer) const {
    return layer + 1 < depth() ? layer_offsets[layer + 1] : gates.size();
  }

  int count_one_qubit_clifford() const;  // H, S, Sdg
  int count_two_qubit() const;           // CNOT, SWAP
  int count_rx() const;

  void check_layers_valid() const;

  /// One gate per line ("H 0", "CNOT 1 2", "RX 0.7853981633974483 2"),
  /// layers separated by a "---" line.
  std::string str() const;
  static CompiledCircuit parse(std::istream& in, int num_qubits);
};

/// Conjugation-based compilation of exp(i theta P / 2) restricted to the
/// coupling graph: at most one RX, 2n one-qubit Clifford gates and 2n - 2
/// CNOT/SWAP gates, all two-qubit gates on graph edges.
CompiledCircuit compile_spanning_tree(const PauliString& p, double theta,
                                      const ConnectivityGraph& graph);

/// All-to-all compilation with a balanced binary CNOT fan-in tree over the
/// support of p; depth at most 2 ceil(log2 w) + 3 for support size w.
CompiledCircuit compile_log_depth(const PauliString& p, double theta);

/// Ordered product of the gate matrices (gate 0 applied first).
MatrixXcd circuit_to_unitary(const CompiledCircuit& c,
                             int max_qubits_dense = 12);

}  // namespace pauliwalk
