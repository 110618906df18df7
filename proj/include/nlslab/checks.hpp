#pragma once

#include <string>
#include <vector>

namespace nlslab {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

// The fast cross-module invariant suite behind the `check` subcommand.
// scratch_dir receives the round-trip test files.
std::vector<CheckResult> run_invariant_suite(const std::string& scratch_dir);

}  // namespace nlslab
