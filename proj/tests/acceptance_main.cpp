// Acceptance suite: one pass/fail line per criterion. Run with --scale slow
// to add the Monte Carlo cross-checks and the large (n=2, t=3) gap.
#include <cstring>
#include <iomanip>
#include <iostream>

#include "pauliwalk/verify.hpp"

int main(int argc, char** argv) {
  pauliwalk::VerifyScale scale = pauliwalk::VerifyScale::fast;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--scale") == 0 && i + 1 < argc) {
      if (std::strcmp(argv[i + 1], "slow") == 0) {
        scale = pauliwalk::VerifyScale::slow;
      } else if (std::strcmp(argv[i + 1], "fast") != 0) {
        std::cerr << "unknown scale " << argv[i + 1] << "\n";
        return 2;
      }
      ++i;
    }
  }

  int failures = 0;
  for (const auto& result : pauliwalk::run_acceptance_checks(scale)) {
    std::cout << (result.passed ? "PASS" : "FAIL") << " " << result.name
              << " (" << std::fixed << std::setprecision(2) << result.seconds
              << "s): " << result.detail << "\n";
    std::cout.unsetf(std::ios::fixed);
    failures += result.passed ? 0 : 1;
  }
  if (failures > 0) {
    std::cout << failures << " criterion check(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
