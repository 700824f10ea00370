#pragma once

#include <string>
#include <vector>

namespace uncross {

// Result of one verification pass over a quantified domain. A check passes
// iff it found no violations; casesChecked reports the size of the domain
// actually swept.
struct CheckReport {
  std::string name;
  std::string universe;
  long long casesChecked = 0;
  std::vector<std::string> violations;

  bool pass() const { return violations.empty(); }
};

std::string to_json_line(const CheckReport& r);

}  // namespace uncross
