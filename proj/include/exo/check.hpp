#pragma once

#include <string>
#include <vector>

namespace exo {

// One verified statement. `lemma` names the result being checked; failed
// checks carry a witness in the polynomial grammar.
struct CheckResult {
  std::string name;
  std::string lemma;
  bool passed = false;
  std::string witness;
  std::string detail;
};

inline bool all_passed(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.passed)
      return false;
  return true;
}

} // namespace exo
