#include "pauliwalk/circuit.hpp"

#include <algorithm>
#include <deque>
#include <iomanip>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pauliwalk {

namespace {

void check_qubit(int q, int n, const char* what) {
  if (q < 0 || q >= n) {
    throw std::invalid_argument(std::string(what) + ": qubit index out of range");
  }
}

}  // namespace

ConnectivityGraph::ConnectivityGraph(int n,
                                     std::vector<std::pair<int, int>> edge_list)
    : num_qubits(n), edges(std::move(edge_list)) {
  if (n < 1) throw std::invalid_argument("ConnectivityGraph: n must be >= 1");
  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : edges) {
    check_qubit(u, n, "ConnectivityGraph");
    check_qubit(v, n, "ConnectivityGraph");
    if (u == v) throw std::invalid_argument("ConnectivityGraph: self loop");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) {
      throw std::invalid_argument("ConnectivityGraph: duplicate edge");
    }
  }
  if (!is_connected()) {
    throw std::invalid_argument("ConnectivityGraph: graph is not connected");
  }
}

ConnectivityGraph ConnectivityGraph::complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  if (n == 1) return ConnectivityGraph(1, {});
  return ConnectivityGraph(n, std::move(edges));
}

ConnectivityGraph ConnectivityGraph::path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return ConnectivityGraph(n, std::move(edges));
}

ConnectivityGraph ConnectivityGraph::parse(std::istream& in) {
  std::string tag;
  int n = 0;
  if (!(in >> tag >> n) || tag != "n") {
    throw std::invalid_argument("ConnectivityGraph: expected header \"n <num>\"");
  }
  std::vector<std::pair<int, int>> edges;
  int u, v;
  while (in >> u >> v) edges.emplace_back(u, v);
  return ConnectivityGraph(n, std::move(edges));
}

std::string ConnectivityGraph::str() const {
  std::ostringstream os;
  os << "n " << num_qubits << "\n";
  for (const auto& [u, v] : edges) os << u << " " << v << "\n";
  return os.str();
}

std::vector<std::vector<int>> ConnectivityGraph::adjacency() const {
  std::vector<std::vector<int>> adj(num_qubits);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  return adj;
}

bool ConnectivityGraph::is_connected() const {
  if (num_qubits == 1) return true;
  std::vector<std::vector<int>> adj(num_qubits);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> seen(num_qubits, false);
  std::deque<int> queue{0};
  seen[0] = true;
  int reached = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        queue.push_back(v);
      }
    }
  }
  return reached == num_qubits;
}

int CompiledCircuit::count_one_qubit_clifford() const {
  int c = 0;
  for (const Gate& g : gates) {
    if (g.kind == GateKind::H || g.kind == GateKind::S ||
        g.kind == GateKind::Sdg) {
      ++c;
    }
  }
  return c;
}

int CompiledCircuit::count_two_qubit() const {
  int c = 0;
  for (const Gate& g : gates) c += g.is_two_qubit() ? 1 : 0;
  return c;
}

int CompiledCircuit::count_rx() const {
  int c = 0;
  for (const Gate& g : gates) c += g.kind == GateKind::Rx ? 1 : 0;
  return c;
}

void CompiledCircuit::check_layers_valid() const {
  if (layer_offsets.empty() || layer_offsets.front() != 0) {
    throw std::logic_error("CompiledCircuit: bad layer offsets");
  }
  for (int layer = 0; layer < depth(); ++layer) {
    std::set<int> used;
    for (std::size_t i = layer_begin(layer); i < layer_end(layer); ++i) {
      const Gate& g = gates[i];
      if (!used.insert(g.q0).second ||
          (g.is_two_qubit() && !used.insert(g.q1).second)) {
        throw std::logic_error("CompiledCircuit: qubit reused within a layer");
      }
    }
  }
}

std::string CompiledCircuit::str() const {
  std::ostringstream os;
  os << std::setprecision(17);
  for (int layer = 0; layer < depth(); ++layer) {
    if (layer > 0) os << "---\n";
    for (std::size_t i = layer_begin(layer); i < layer_end(layer); ++i) {
      const Gate& g = gates[i];
      switch (g.kind) {
        case GateKind::H:
          os << "H " << g.q0 << "\n";
          break;
        case GateKind::S:
          os << "S " << g.q0 << "\n";
          break;
        case GateKind::Sdg:
          os << "SDG " << g.q0 << "\n";
          break;
        case GateKind::Cnot:
          os << "CNOT " << g.q0 << " " << g.q1 << "\n";
          break;
        case GateKind::Swap:
          os << "SWAP " << g.q0 << " " << g.q1 << "\n";
          break;
        case GateKind::Rx:
          os << "RX " << g.theta << " " << g.q0 << "\n";
          break;
      }
    }
  }
  return os.str();
}

CompiledCircuit CompiledCircuit::parse(std::istream& in, int num_qubits) {
  CompiledCircuit c;
  c.num_qubits = num_qubits;
  c.layer_offsets.push_back(0);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line == "---") {
      c.layer_offsets.push_back(c.gates.size());
      continue;
    }
    std::istringstream ls(line);
    std::string op;
    ls >> op;
    if (op == "H" || op == "S" || op == "SDG") {
      int q;
      ls >> q;
      check_qubit(q, num_qubits, "CompiledCircuit::parse");
      c.gates.push_back(op == "H" ? Gate::h(q)
                                  : op == "S" ? Gate::s(q) : Gate::sdg(q));
    } else if (op == "CNOT" || op == "SWAP") {
      int a, b;
      ls >> a >> b;
      check_qubit(a, num_qubits, "CompiledCircuit::parse");
      check_qubit(b, num_qubits, "CompiledCircuit::parse");
      c.gates.push_back(op == "CNOT" ? Gate::cnot(a, b) : Gate::swap(a, b));
    } else if (op == "RX") {
      double theta;
      int q;
      ls >> theta >> q;
      check_qubit(q, num_qubits, "CompiledCircuit::parse");
      c.gates.push_back(Gate::rx(theta, q));
    } else {
      throw std::invalid_argument("CompiledCircuit::parse: unknown gate " + op);
    }
  }
  return c;
}

namespace {

/// Packs a gate sequence into layers of contiguous runs with pairwise
/// disjoint qubits, so flattening the layers reproduces the gate order.
CompiledCircuit layered(int num_qubits, const std::vector<Gate>& gates) {
  CompiledCircuit c;
  c.num_qubits = num_qubits;
  c.gates = gates;
  c.layer_offsets.push_back(0);
  std::set<int> used;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    const bool conflict = used.count(g.q0) != 0 ||
                          (g.is_two_qubit() && used.count(g.q1) != 0);
    if (conflict) {
      c.layer_offsets.push_back(i);
      used.clear();
    }
    used.insert(g.q0);
    if (g.is_two_qubit()) used.insert(g.q1);
  }
  c.check_layers_valid();
  return c;
}

std::vector<Gate> basis_change_gates(const PauliString& p, bool closing) {
  // Conjugating X by nothing, Z by H, and Y by S-dagger turns every
  // supported letter into X: H Z H = X and Sdg Y S = X, both exactly.
  std::vector<Gate> gates;
  for (int q = 0; q < p.num_qubits; ++q) {
    switch (p.letter(q)) {
      case 'Z':
        gates.push_back(Gate::h(q));
        break;
      case 'Y':
        gates.push_back(closing ? Gate::s(q) : Gate::sdg(q));
        break;
      default:
        break;
    }
  }
  return gates;
}

}  // namespace

CompiledCircuit compile_spanning_tree(const PauliString& p, double theta,
                                      const ConnectivityGraph& graph) {
  if (p.is_identity()) {
    throw std::invalid_argument("compile_spanning_tree: identity Pauli");
  }
  if (graph.num_qubits != p.num_qubits) {
    throw std::invalid_argument(
        "compile_spanning_tree: graph size does not match the Pauli string");
  }
  const int n = p.num_qubits;

  std::vector<bool> supported(n, false);
  int root = -1;
  for (int q = 0; q < n; ++q) {
    supported[q] = p.letter(q) != 'I';
    if (supported[q] && root < 0) root = q;
  }

  // BFS spanning tree from the lowest-index supported qubit; processing the
  // nodes in reverse BFS order guarantees each node's children are cleared
  // before its own edge is handled.
  const auto adj = graph.adjacency();
  std::vector<int> parent(n, -1), order;
  std::vector<bool> seen(n, false);
  std::deque<int> queue{root};
  seen[root] = true;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    order.push_back(u);
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        parent[v] = u;
        queue.push_back(v);
      }
    }
  }

  std::vector<Gate> tree_gates;
  std::vector<bool> bit = supported;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    if (v == root || !bit[v]) continue;
    const int u = parent[v];
    tree_gates.push_back(bit[u] ? Gate::cnot(u, v) : Gate::swap(u, v));
    bit[u] = true;
    bit[v] = false;
  }

  std::vector<Gate> gates = basis_change_gates(p, /*closing=*/false);
  gates.insert(gates.end(), tree_gates.begin(), tree_gates.end());
  gates.push_back(Gate::rx(theta, root));
  gates.insert(gates.end(), tree_gates.rbegin(), tree_gates.rend());
  const std::vector<Gate> closing = basis_change_gates(p, /*closing=*/true);
  gates.insert(gates.end(), closing.begin(), closing.end());
  return layered(n, gates);
}

CompiledCircuit compile_log_depth(const PauliString& p, double theta) {
  if (p.is_identity()) {
    throw std::invalid_argument("compile_log_depth: identity Pauli");
  }
  const int n = p.num_qubits;

  std::vector<int> support;
  for (int q = 0; q < n; ++q) {
    if (p.letter(q) != 'I') support.push_back(q);
  }

  CompiledCircuit c;
  c.num_qubits = n;
  auto push_layer = [&c](const std::vector<Gate>& layer) {
    if (layer.empty()) return;
    c.layer_offsets.push_back(c.gates.size());
    c.gates.insert(c.gates.end(), layer.begin(), layer.end());
  };

  push_layer(basis_change_gates(p, /*closing=*/false));

  // Balanced binary fan-in: each round halves the set of carriers, with the
  // pair's lower-index qubit as CNOT control so it keeps the X.
  std::vector<std::vector<Gate>> fan_in_layers;
  std::vector<int> carriers = support;
  while (carriers.size() > 1) {
    std::vector<Gate> layer;
    std::vector<int> next;
    for (std::size_t i = 0; i + 1 < carriers.size(); i += 2) {
      layer.push_back(Gate::cnot(carriers[i], carriers[i + 1]));
      next.push_back(carriers[i]);
    }
    if (carriers.size() % 2 == 1) next.push_back(carriers.back());
    fan_in_layers.push_back(layer);
    carriers = next;
  }
  for (const auto& layer : fan_in_layers) push_layer(layer);

  push_layer({Gate::rx(theta, carriers.front())});

  for (auto it = fan_in_layers.rbegin(); it != fan_in_layers.rend(); ++it) {
    push_layer(*it);
  }
  push_layer(basis_change_gates(p, /*closing=*/true));

  c.check_layers_valid();
  return c;
}

MatrixXcd circuit_to_unitary(const CompiledCircuit& c, int max_qubits_dense) {
  if (c.num_qubits > max_qubits_dense) {
    throw std::length_error("circuit_to_unitary: above dense limit");
  }
  const int n = c.num_qubits;
  const Eigen::Index dim = Eigen::Index(1) << n;
  // Qubit q is index bit (n-1-q): qubit 0 is the most significant bit.
  const auto bit_of = [n](int q) {
    return Eigen::Index(1) << (n - 1 - q);
  };

  MatrixXcd u = MatrixXcd::Identity(dim, dim);
  const std::complex<double> i_unit(0.0, 1.0);
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::H:
      case GateKind::S:
      case GateKind::Sdg:
      case GateKind::Rx: {
        Eigen::Matrix2cd m;
        if (g.kind == GateKind::H) {
          m << 1, 1, 1, -1;
          m /= std::sqrt(2.0);
        } else if (g.kind == GateKind::S) {
          m << 1, 0, 0, i_unit;
        } else if (g.kind == GateKind::Sdg) {
          m << 1, 0, 0, -i_unit;
        } else {
          const double c2 = std::cos(g.theta / 2);
          const double s2 = std::sin(g.theta / 2);
          m << c2, i_unit * s2, i_unit * s2, c2;
        }
        const Eigen::Index b = bit_of(g.q0);
        for (Eigen::Index r = 0; r < dim; ++r) {
          if ((r & b) != 0) continue;
          const Eigen::RowVectorXcd r0 = u.row(r);
          const Eigen::RowVectorXcd r1 = u.row(r | b);
          u.row(r) = m(0, 0) * r0 + m(0, 1) * r1;
          u.row(r | b) = m(1, 0) * r0 + m(1, 1) * r1;
        }
        break;
      }
      case GateKind::Cnot: {
        const Eigen::Index bc = bit_of(g.q0);
        const Eigen::Index bt = bit_of(g.q1);
        for (Eigen::Index r = 0; r < dim; ++r) {
          if ((r & bc) != 0 && (r & bt) == 0) u.row(r).swap(u.row(r | bt));
        }
        break;
      }
      case GateKind::Swap: {
        const Eigen::Index ba = bit_of(g.q0);
        const Eigen::Index bb = bit_of(g.q1);
        for (Eigen::Index r = 0; r < dim; ++r) {
          if ((r & ba) != 0 && (r & bb) == 0) {
            u.row(r).swap(u.row((r & ~ba) | bb));
          }
        }
        break;
      }
    }
  }
  return u;
}

}  // namespace pauliwalk
