#pragma once

#include <string>
#include <vector>

namespace pauliwalk {

enum class VerifyScale { fast, slow };

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the acceptance checks. The fast scale covers every criterion at the
/// desk-scale dimensions; slow adds the Monte Carlo cross-checks and the
/// (n=2, t=3) gap at dimension 4096.
std::vector<CheckResult> run_acceptance_checks(VerifyScale scale);

}  // namespace pauliwalk
