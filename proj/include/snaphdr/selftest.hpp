#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace snaphdr::selftest {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Gradient-integrity and radiometric-oracle suite: naive-convolution
/// comparison, finite-difference checks for every differentiable op and a
/// toy U-Net, the Adam scalar reference, the broken-backward negative
/// control, and the O/U-correction and Debevec quantization-bound oracles.
std::vector<CheckResult> run_checks();

/// Prints one line per check; returns the number of failures.
int run(std::ostream& out);

}  // namespace snaphdr::selftest
