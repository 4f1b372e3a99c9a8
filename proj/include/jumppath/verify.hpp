#pragma once

// Cross-module invariant suite behind `jumppath verify`.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace jumppath {

struct CheckResult {
  std::string name;
  std::vector<std::string> failures;  // empty on success
  bool passed() const { return failures.empty(); }
};

struct VerifyOptions {
  /// Largest p, q (and related loop bounds) exercised by the identity checks.
  std::uint32_t max_pq = 12;
};

/// Runs every check; never throws for a failing check (exceptions raised by a
/// check are recorded as failures of that check).
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

}  // namespace jumppath
