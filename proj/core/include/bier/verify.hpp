#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace bier {

/// One row of the reproduction summary.
struct CheckResult {
  int id = 0;
  std::string name;
  std::string source;    ///< which reference table the expectation comes from
  std::string expected;
  std::string computed;
  bool pass = false;
};

/// Runs the twelve reproduction checks in order. Exceptions inside a check
/// turn into a failed row carrying the message.
std::vector<CheckResult> run_reproduction_checks(int threads = 0);

/// Runs a single check by id (1..12).
CheckResult run_reproduction_check(int id, int threads = 0);

/// Writes summary.md and summary.json into dir.
void write_summary(const std::vector<CheckResult>& results, const std::filesystem::path& dir);

}  // namespace bier
