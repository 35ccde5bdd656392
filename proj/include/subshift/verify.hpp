// verify.hpp -- the built-in verification suite behind `subshift verify`
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace subshift {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool applicable = true;  ///< false when the preset selection leaves nothing to check
  bool pass = false;       ///< vacuously true when not applicable
  std::string detail;      ///< deterministic measured values
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t scan_budget = 100000;
  /// Presets to exercise; empty means all of them.
  std::vector<std::string> presets;
  /// Per-criterion progress lines with timings (not part of any artifact).
  std::ostream* progress = nullptr;
};

/// Runs the ten verification criteria restricted to the selected presets.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts);

bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace subshift
