#pragma once

#include <string>
#include <vector>

#include "agcb/kernel.hpp"

namespace agcb {

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Kernel invariant suites over the kernel's full window: genus (reduced-basis
/// weights against the declared genus), canonical witness l((2g-2)P) = g,
/// torsion order, the Riemann-Roch functional equation, P <-> Q symmetry
/// (the curves' automorphism groups are 2-transitive on rational points) and,
/// for Hermitian curves, the closed-form dimension count.
std::vector<SuiteResult> run_selftest(const FunctionFieldKernel& kernel);

}  // namespace agcb
