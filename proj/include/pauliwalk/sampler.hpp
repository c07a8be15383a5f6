#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pauliwalk/linalg.hpp"
#include "pauliwalk/pauli.hpp"

namespace pauliwalk {

enum class GeneratorKind { full_pauli, skew_pauli, elementary };

/// Angle distribution of one walk step: uniform on a symmetric interval, or
/// uniform on the discrete set Theta_t = {m pi / t : m in [-t, t-1]}.
struct AngleMode {
  enum class Kind { continuous, discrete };
  Kind kind = Kind::continuous;
  double half_width = M_PI;  // continuous case; pi or 2 pi
  int t = 0;                 // discrete case

  static AngleMode continuous(double half_width);
  static AngleMode discrete(int t);
};

/// The discrete angle set Theta_t, size 2t.
std::vector<double> discrete_angles(int t);

struct WalkConfig {
  GeneratorKind generator = GeneratorKind::full_pauli;
  int num_qubits = 0;  // Pauli generator sets
  int dim = 0;         // elementary set: N >= 3; 2^num_qubits otherwise
  std::int64_t steps = 0;
  AngleMode angle_mode;
  std::uint64_t seed = 0;

  static WalkConfig pauli_walk(int n, std::int64_t steps, AngleMode mode,
                               std::uint64_t seed);
  static WalkConfig skew_walk(int n, std::int64_t steps, AngleMode mode,
                              std::uint64_t seed);
  static WalkConfig elementary_walk(int N, std::int64_t steps, AngleMode mode,
                                    std::uint64_t seed);

  std::uint64_t generator_count() const;
  int matrix_dim() const;
  void validate() const;
};

/// One sampled step. For the Pauli generator sets `pauli` is set; for the
/// elementary set the plane indices (plane_a < plane_b) are set instead.
struct RotationSample {
  GeneratorKind kind = GeneratorKind::full_pauli;
  PauliString pauli;
  int plane_a = -1;
  int plane_b = -1;
  double angle = 0.0;
};

/// Deterministic function of (cfg.seed, step_index): the generator is
/// uniform over the configured set and the angle uniform over the angle
/// mode's support.
RotationSample sample_step(const WalkConfig& cfg, std::int64_t step_index);

/// Product of the cfg.steps sampled rotations, step 0 applied first.
MatrixXcd walk_unitary(const WalkConfig& cfg, Eigen::Index dense_limit = 4096);

enum class DesignTarget { diamond, relative };

/// Steps sufficient for an eps-approximate design at order t:
/// ceil((4 log 2) n t^2 + 4 t log(1/eps)) for the diamond-norm target and
/// ceil((4 log 8) n t^2 + 4 t log(1/eps)) for the relative-error target.
std::int64_t required_steps(int n, int t, double eps, DesignTarget target);

/// One JSON line of a walk transcript: {"step":i,"pauli":"XZ..","angle":a}.
std::string transcript_json_line(std::int64_t step, const RotationSample& s);

}  // namespace pauliwalk
