// The command-line surface: build / verify / export-dot / mobius / shelling /
// medial-demo, factored so the whole run is testable in-process. Identical
// configurations (including the seed) produce byte-identical output.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uncross {

struct CliConfig {
  std::string command;  // build | verify | export-dot | mobius | shelling | medial-demo
  int n = 3;
  bool bottom = false;
  std::vector<std::string> checks;  // empty = default suite
  unsigned long long seed = 0;
  double budget = 0;  // seconds; 0 = unlimited, required for verify at n = 5
  int jobs = 1;
  std::string output;  // path, empty = stdout
  int x = -1, y = -1;  // mobius element ids
  std::string matching_json;  // medial-demo input, empty = top matching
};

// Exit code 0: success / all checks pass. 1: a property violation,
// incomparable mobius query, or internal invariant failure. 2: usage error.
int cli_run(const CliConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace uncross
