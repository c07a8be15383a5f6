#include "pauliwalk/report.hpp"

#include "pauliwalk/casimir.hpp"

namespace pauliwalk {

nlohmann::json gap_report_json(const GapReport& report, std::uint64_t seed) {
  nlohmann::json j;
  j["group"] = report.group;
  j["generator_set"] = report.generator_set;
  j["n"] = report.num_qubits;
  j["N"] = report.matrix_dim;
  j["t"] = report.t;
  j["dim"] = static_cast<std::int64_t>(report.rep_dim);
  j["gap_norm"] = report.gap_norm;
  j["theorem_bound"] = report.theorem_bound;
  if (report.group == "su") {
    j["theorem_bound_formula"] = "1 - 1/(4t) - 1/(4^n - 1)";
  } else if (report.generator_set == "skew_pauli") {
    j["theorem_bound_formula"] =
        "1 - (1/(2t)) (N-2)/(N-1) - 2/(N(N-1))";
  } else {
    j["theorem_bound_formula"] =
        "1 - (1/t) 2(N-2)/(N(N-1)) - 2/(N(N-1))";
  }
  if (report.improved_bound.has_value()) {
    j["improved_bound"] = *report.improved_bound;
    j["improved_bound_formula"] = "1 - (1/(2t)) N(N-t+1)/(N^2 - 1)";
  }
  if (report.group == "su") {
    j["quadratic_casimir_bound"] =
        gap_bound(report.num_qubits, report.t).main;
    j["quadratic_casimir_bound_formula"] =
        "1 - (1/(4t)) N^2/(N^2-1) - 1/(N^2-1)";
  }
  j["trivial_dim"] = report.trivial_dim;
  j["tol"] = report.tol;
  j["method"] = report.method;
  j["seed"] = seed;
  if (report.group == "su") {
    // The bound for arbitrary finite-dimensional representations is only
    // exercised on tensor-representation subspaces here.
    j["scope"] = "tensor-representation subspaces; the general "
                 "representation bound is not numerically verified";
  }
  return j;
}

nlohmann::json report_envelope(const nlohmann::json& result,
                               std::uint64_t seed, double seconds) {
  nlohmann::json j;
  j["version"] = kVersion;
  j["seed"] = seed;
  j["result"] = result;
  j["timing"] = {{"seconds", seconds}};
  return j;
}

}  // namespace pauliwalk
