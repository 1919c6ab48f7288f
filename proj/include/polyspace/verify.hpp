#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace polyspace {

struct Failure {
  std::string case_id;
  double deviation = 0.0;
  double tolerance = 0.0;
};

struct RunReport {
  std::string suite;
  int trials = 0;
  /// First kMaxListedFailures failures; failure_count has the total.
  std::vector<Failure> failures;
  int failure_count = 0;
  /// Largest deviation/tolerance ratio seen, passing or not.
  double worst_ratio = 0.0;
  double wall_clock_seconds = 0.0;

  bool passed() const { return failure_count == 0; }
};

inline constexpr std::size_t kMaxListedFailures = 50;

/// hopf, gc, bend, kahler, dh, hexcount, roundtrip.
const std::vector<std::string>& suite_names();

/// Runs one suite; trial j draws from derive_seed(seed, j). Throws InvalidArgument on an unknown name.
RunReport run_suite(const std::string& name, int trials, std::uint64_t seed);

/// `suite` may be "all".
std::vector<RunReport> run_verify(const std::string& suite, int trials, std::uint64_t seed);

/// {"passed": bool, "suites": [{"suite", "trials", "failure_count", "failures": [...], "worst_ratio", "wall_clock_s"}]}
std::string reports_to_json(const std::vector<RunReport>& reports);

}  // namespace polyspace
