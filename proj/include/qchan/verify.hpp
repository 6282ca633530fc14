#pragma once

#include <string>
#include <vector>

#include "qchan/linalg.hpp"

namespace qchan {

struct CheckResult {
  std::string name;
  double residual = 0.0;  // worst case over all instances
  double tolerance = 0.0;
  int instances = 0;
  bool pass = false;
};

// Randomized structural invariant suites.  Each runs `instances` seeded random
// cases and reports the worst residual per named check.
std::vector<CheckResult> verify_suite(const std::string& suite,
                                      std::uint64_t seed, int instances);

// Suite names accepted by verify_suite, in reporting order.
const std::vector<std::string>& verify_suite_names();

}  // namespace qchan
