#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace burchlab {

/// One golden case: a short id, what it reproduces, and a check appending
/// one line per mismatch.
struct GoldenCase {
  std::string id;
  std::string description;
  std::function<void(std::vector<std::string>&)> check;
};

struct GoldenOutcome {
  std::string id;
  std::string description;
  std::vector<std::string> mismatches;
  double seconds = 0;

  bool passed() const { return mismatches.empty(); }
};

const std::vector<GoldenCase>& golden_cases();

/// Runs every case, or just `only`. Exceptions inside a case count as mismatches.
/// Throws Error for an unknown id.
std::vector<GoldenOutcome> run_golden(const std::optional<std::string>& only = std::nullopt);

}  // namespace burchlab
