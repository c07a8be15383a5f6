#include "pauliwalk/casimir.hpp"

#include <cmath>
#include <stdexcept>

namespace pauliwalk {

HighestWeight::HighestWeight(Eigen::VectorXi entries) : mu(std::move(entries)) {
  if (mu.size() < 2) {
    throw std::invalid_argument("HighestWeight: need at least 2 entries");
  }
  long long sum = 0;
  for (Eigen::Index i = 0; i < mu.size(); ++i) {
    sum += mu(i);
    if (i > 0 && mu(i) > mu(i - 1)) {
      throw std::invalid_argument("HighestWeight: entries must be nonincreasing");
    }
  }
  if (sum != 0) {
    throw std::invalid_argument("HighestWeight: entries must sum to zero");
  }
}

double casimir_ratio(const HighestWeight& weight) {
  const int N = weight.dim_n();
  if (N % 2 != 0) {
    throw std::invalid_argument("casimir_ratio: N must be even");
  }
  double dot_mu = 0.0, dot_delta = 0.0, half_sum = 0.0;
  for (int i = 0; i < N; ++i) {
    const double m = weight.mu(i);
    dot_mu += m * m;
    dot_delta += m * (N - 1.0 - 2.0 * i);
    half_sum += (i < N / 2) ? m : -m;
  }
  if (half_sum == 0.0) {
    throw std::invalid_argument("casimir_ratio: weight has zero norm on the "
                                "chosen Cartan element");
  }
  return N * (dot_mu + dot_delta) / (half_sum * half_sum);
}

double casimir_lower_bound(int N, double ell) {
  return N * static_cast<double>(N) * ell / 4.0 + ell * ell;
}

double casimir_upper_bound(int N, double ell) {
  return N * (N - 1.0) * ell / 2.0 + (N - 1.0) * ell * ell;
}

GapBound gap_bound(int n, int t) {
  if (n < 1 || t < 1) throw std::invalid_argument("gap_bound: n, t >= 1");
  const double N = std::pow(2.0, n);
  const double N2 = N * N;
  GapBound out;
  out.main = 1.0 - (1.0 / (4.0 * t)) * N2 / (N2 - 1.0) - 1.0 / (N2 - 1.0);
  if (t <= N / 2) {
    out.small_t = 1.0 - (1.0 / (2.0 * t)) * N * (N - t + 1.0) / (N2 - 1.0);
  }
  return out;
}

HighestWeight small_t_minimizer_weight(int N, int t) {
  if (2 * t > N) {
    throw std::invalid_argument("small_t_minimizer_weight: need t <= N/2");
  }
  Eigen::VectorXi mu = Eigen::VectorXi::Zero(N);
  for (int i = 0; i < t; ++i) {
    mu(i) = 1;
    mu(N - 1 - i) = -1;
  }
  return HighestWeight(mu);
}

}  // namespace pauliwalk
