#pragma once

#include <string>
#include <vector>

namespace specmom {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Quick invariant sweep over every module, sized to finish in a few seconds.
std::vector<CheckResult> run_selfcheck();

}  // namespace specmom
