#include "pauliwalk/state_design.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "pauliwalk/moment.hpp"
#include "pauliwalk/rng.hpp"

namespace pauliwalk {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t numer = static_cast<std::uint64_t>(n - k + i);
    if (result > ~0ull / numer) {
      throw std::overflow_error("binomial: result overflows 64 bits");
    }
    result = result * numer / i;
  }
  return result;
}

SymmetricSpace build_symmetric_space(int N, int t, Eigen::Index dense_limit) {
  if (N < 2 || t < 1) {
    throw std::invalid_argument("build_symmetric_space: need N >= 2, t >= 1");
  }
  const Eigen::Index full_dim = checked_dim(N, t, dense_limit);
  const std::uint64_t sym_dim = binomial(N + t - 1, t);
  if (sym_dim > static_cast<std::uint64_t>(dense_limit)) {
    throw std::length_error("build_symmetric_space: symmetric dimension "
                            "above dense limit");
  }

  SymmetricSpace sym;
  sym.N = N;
  sym.t = t;
  sym.dim = static_cast<Eigen::Index>(sym_dim);
  sym.isometry = MatrixXcd::Zero(full_dim, sym.dim);

  // Map each word in [N]^t to its occupation vector; words of equal type
  // accumulate into one column, normalized at the end.
  std::map<std::vector<int>, Eigen::Index> column_of;
  std::vector<int> word(t, 0);
  for (Eigen::Index w = 0; w < full_dim; ++w) {
    Eigen::Index rem = w;
    for (int j = t - 1; j >= 0; --j) {
      word[j] = static_cast<int>(rem % N);
      rem /= N;
    }
    std::vector<int> occupation(N, 0);
    for (int j = 0; j < t; ++j) ++occupation[word[j]];
    auto [it, inserted] = column_of.try_emplace(
        occupation, static_cast<Eigen::Index>(column_of.size()));
    sym.isometry(w, it->second) += 1.0;
  }
  if (static_cast<std::uint64_t>(column_of.size()) != sym_dim) {
    throw std::logic_error("build_symmetric_space: basis count mismatch");
  }
  for (Eigen::Index c = 0; c < sym.dim; ++c) {
    sym.isometry.col(c) /= sym.isometry.col(c).norm();
  }
  return sym;
}

MatrixXcd haar_state_moment(int N, int t, Eigen::Index dense_limit) {
  const std::uint64_t sym_dim = binomial(N + t - 1, t);
  if (sym_dim > static_cast<std::uint64_t>(dense_limit)) {
    throw std::length_error("haar_state_moment: dimension above dense limit");
  }
  const Eigen::Index d = static_cast<Eigen::Index>(sym_dim);
  return MatrixXcd::Identity(d, d) / static_cast<double>(d);
}

MatrixXcd symmetric_pure_power(const SymmetricSpace& sym,
                               const VectorXcd& alpha) {
  if (alpha.size() != sym.N) {
    throw std::invalid_argument("symmetric_pure_power: wrong vector size");
  }
  VectorXcd power = VectorXcd::Ones(1);
  for (int j = 0; j < sym.t; ++j) {
    VectorXcd next(power.size() * sym.N);
    for (Eigen::Index i = 0; i < power.size(); ++i) {
      next.segment(i * sym.N, sym.N) = power(i) * alpha;
    }
    power = next;
  }
  const VectorXcd v = sym.isometry.adjoint() * power;
  return v * v.adjoint();
}

PauliStateChannel::PauliStateChannel(int n, int t, Eigen::Index dense_limit)
    : sym_(build_symmetric_space(1 << n, t, dense_limit)) {
  const std::uint64_t count = pauli_count(n);
  terms_.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const MatrixXcd generator =
        sym_.isometry.adjoint() *
        sum_over_slots(0.5 * to_matrix(pauli_at(n, i)), t, dense_limit) *
        sym_.isometry;
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(generator);
    Term term;
    term.vectors = es.eigenvectors();
    term.two_lambda.resize(sym_.dim);
    for (Eigen::Index j = 0; j < sym_.dim; ++j) {
      term.two_lambda[j] =
          static_cast<int>(std::lround(2.0 * es.eigenvalues()(j)));
    }
    terms_.push_back(std::move(term));
  }
}

MatrixXcd PauliStateChannel::apply(const MatrixXcd& eta) const {
  MatrixXcd out = MatrixXcd::Zero(sym_.dim, sym_.dim);
  for (const Term& term : terms_) {
    MatrixXcd rotated = term.vectors.adjoint() * eta * term.vectors;
    for (Eigen::Index i = 0; i < sym_.dim; ++i) {
      for (Eigen::Index j = 0; j < sym_.dim; ++j) {
        if (term.two_lambda[i] != term.two_lambda[j]) rotated(i, j) = 0.0;
      }
    }
    out += term.vectors * rotated * term.vectors.adjoint();
  }
  return out / static_cast<double>(terms_.size());
}

MatrixXcd PauliStateChannel::apply_power(MatrixXcd eta, int k) const {
  if (k < 0) throw std::invalid_argument("apply_power: k must be >= 0");
  for (int i = 0; i < k; ++i) eta = apply(eta);
  return eta;
}

double state_design_bound(int N, int t, int k) {
  const double contraction = 1.0 - N / (2.0 * t * (N + 1.0)) -
                             N / (2.0 * (static_cast<double>(N) * N - 1.0));
  return std::sqrt(static_cast<double>(binomial(N + t - 1, t))) *
         std::pow(contraction, k);
}

StateDesignResult state_design_distance(int n, int t, int k,
                                        const VectorXcd& alpha,
                                        Eigen::Index dense_limit) {
  const int N = 1 << n;
  PauliStateChannel channel(n, t, dense_limit);
  const MatrixXcd input = symmetric_pure_power(channel.sym(), alpha);
  const MatrixXcd output = channel.apply_power(input, k);
  const MatrixXcd deviation = output - haar_state_moment(N, t, dense_limit);

  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(deviation);
  StateDesignResult result;
  result.dim_sym = channel.sym().dim;
  result.distance = es.eigenvalues().cwiseAbs().sum();
  result.bound = state_design_bound(N, t, k);
  if (result.distance > result.bound + 1e-8) {
    std::ostringstream os;
    os << "violated inequality trace_distance <= sqrt(binom(N+t-1,t)) "
          "(1 - N/(2t(N+1)) - N/(2(N^2-1)))^k: "
       << result.distance << " > " << result.bound;
    throw std::runtime_error(os.str());
  }
  return result;
}

VectorXcd random_state(int N, std::uint64_t seed) {
  StepRng rng(seed, 0x616c706861ull);
  VectorXcd v(N);
  for (int i = 0; i < N; ++i) {
    v(i) = std::complex<double>(rng.next_normal(), rng.next_normal());
  }
  v.normalize();
  return v;
}

}  // namespace pauliwalk
