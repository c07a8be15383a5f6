#include "pauliwalk/sampler.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "pauliwalk/rng.hpp"

namespace pauliwalk {

AngleMode AngleMode::continuous(double half_width) {
  const bool is_pi = std::abs(half_width - M_PI) < 1e-12;
  const bool is_two_pi = std::abs(half_width - 2 * M_PI) < 1e-12;
  if (!is_pi && !is_two_pi) {
    throw std::invalid_argument("AngleMode: half_width must be pi or 2 pi");
  }
  AngleMode m;
  m.kind = Kind::continuous;
  m.half_width = half_width;
  return m;
}

AngleMode AngleMode::discrete(int t) {
  if (t < 1) throw std::invalid_argument("AngleMode: discrete t must be >= 1");
  AngleMode m;
  m.kind = Kind::discrete;
  m.t = t;
  return m;
}

std::vector<double> discrete_angles(int t) {
  if (t < 1) throw std::invalid_argument("discrete_angles: t must be >= 1");
  std::vector<double> out;
  out.reserve(2 * t);
  for (int m = -t; m < t; ++m) out.push_back(m * M_PI / t);
  return out;
}

WalkConfig WalkConfig::pauli_walk(int n, std::int64_t steps, AngleMode mode,
                                  std::uint64_t seed) {
  WalkConfig cfg;
  cfg.generator = GeneratorKind::full_pauli;
  cfg.num_qubits = n;
  cfg.dim = 1 << n;
  cfg.steps = steps;
  cfg.angle_mode = mode;
  cfg.seed = seed;
  cfg.validate();
  return cfg;
}

WalkConfig WalkConfig::skew_walk(int n, std::int64_t steps, AngleMode mode,
                                 std::uint64_t seed) {
  WalkConfig cfg = pauli_walk(n, steps, mode, seed);
  cfg.generator = GeneratorKind::skew_pauli;
  cfg.validate();
  return cfg;
}

WalkConfig WalkConfig::elementary_walk(int N, std::int64_t steps,
                                       AngleMode mode, std::uint64_t seed) {
  WalkConfig cfg;
  cfg.generator = GeneratorKind::elementary;
  cfg.dim = N;
  cfg.steps = steps;
  cfg.angle_mode = mode;
  cfg.seed = seed;
  cfg.validate();
  return cfg;
}

std::uint64_t WalkConfig::generator_count() const {
  switch (generator) {
    case GeneratorKind::full_pauli:
      return pauli_count(num_qubits);
    case GeneratorKind::skew_pauli:
      return skew_pauli_count(num_qubits);
    case GeneratorKind::elementary:
      return static_cast<std::uint64_t>(dim) * (dim - 1) / 2;
  }
  return 0;
}

int WalkConfig::matrix_dim() const { return dim; }

void WalkConfig::validate() const {
  if (steps < 0) throw std::invalid_argument("WalkConfig: steps must be >= 0");
  if (generator == GeneratorKind::elementary) {
    if (dim < 3) {
      throw std::invalid_argument("WalkConfig: elementary set needs N >= 3");
    }
  } else {
    if (num_qubits < 1) {
      throw std::invalid_argument("WalkConfig: num_qubits must be >= 1");
    }
    if (dim != (1 << num_qubits)) {
      throw std::invalid_argument("WalkConfig: dim must equal 2^num_qubits");
    }
  }
  if (generator_count() == 0) {
    throw std::invalid_argument("WalkConfig: empty generator set");
  }
}

RotationSample sample_step(const WalkConfig& cfg, std::int64_t step_index) {
  cfg.validate();
  if (step_index < 0) {
    throw std::invalid_argument("sample_step: step_index must be >= 0");
  }
  StepRng rng(cfg.seed, static_cast<std::uint64_t>(step_index));
  RotationSample s;
  s.kind = cfg.generator;
  const std::uint64_t index = rng.next_below(cfg.generator_count());
  switch (cfg.generator) {
    case GeneratorKind::full_pauli:
      s.pauli = pauli_at(cfg.num_qubits, index);
      break;
    case GeneratorKind::skew_pauli:
      s.pauli = skew_pauli_at(cfg.num_qubits, index);
      break;
    case GeneratorKind::elementary: {
      // Unrank the pair 0 <= a < b < N from the row-major triangle order.
      std::uint64_t r = index;
      int a = 0;
      while (r >= static_cast<std::uint64_t>(cfg.dim - 1 - a)) {
        r -= cfg.dim - 1 - a;
        ++a;
      }
      s.plane_a = a;
      s.plane_b = a + 1 + static_cast<int>(r);
      break;
    }
  }
  if (cfg.angle_mode.kind == AngleMode::Kind::continuous) {
    s.angle = rng.next_symmetric(cfg.angle_mode.half_width);
  } else {
    const int t = cfg.angle_mode.t;
    const std::uint64_t m = rng.next_below(2 * static_cast<std::uint64_t>(t));
    s.angle = (static_cast<double>(m) - t) * M_PI / t;
  }
  return s;
}

MatrixXcd walk_unitary(const WalkConfig& cfg, Eigen::Index dense_limit) {
  cfg.validate();
  const Eigen::Index dim = cfg.matrix_dim();
  if (dim > dense_limit) {
    throw std::length_error("walk_unitary: dimension above dense limit");
  }
  MatrixXcd u = MatrixXcd::Identity(dim, dim);
  for (std::int64_t i = 0; i < cfg.steps; ++i) {
    const RotationSample s = sample_step(cfg, i);
    if (s.kind == GeneratorKind::elementary) {
      // Left-multiply by exp(angle E_{a,b}): a two-row update.
      const double c = std::cos(s.angle);
      const double sn = std::sin(s.angle);
      const Eigen::RowVectorXcd ra = u.row(s.plane_a);
      u.row(s.plane_a) = c * ra + sn * u.row(s.plane_b);
      u.row(s.plane_b) = -sn * ra + c * u.row(s.plane_b);
    } else {
      u = (pauli_rotation_matrix(s.pauli, s.angle) * u).eval();
    }
  }
  return u;
}

std::int64_t required_steps(int n, int t, double eps, DesignTarget target) {
  if (n < 1 || t < 1) {
    throw std::invalid_argument("required_steps: n, t must be >= 1");
  }
  if (!(eps > 0.0) || eps > 1.0) {
    throw std::invalid_argument("required_steps: eps must be in (0, 1]");
  }
  const double lead = target == DesignTarget::diamond ? 4.0 * std::log(2.0)
                                                      : 4.0 * std::log(8.0);
  const double k = lead * n * static_cast<double>(t) * t +
                   4.0 * t * std::log(1.0 / eps);
  if (k >= 9.2e18) {
    throw std::overflow_error("required_steps: step count overflows");
  }
  return static_cast<std::int64_t>(std::ceil(k));
}

std::string transcript_json_line(std::int64_t step, const RotationSample& s) {
  nlohmann::json line;
  line["step"] = step;
  if (s.kind == GeneratorKind::elementary) {
    line["plane"] = {s.plane_a, s.plane_b};
  } else {
    line["pauli"] = s.pauli.str();
  }
  line["angle"] = s.angle;
  return line.dump();
}

}  // namespace pauliwalk
