#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace s4cover {

struct FailureRecord {
  std::string input;
  std::string observed;
  std::string expected;
};

/// Per-suite verification record. pass holds exactly when max_error is
/// within tolerance and no failure was recorded; the failure list is capped
/// at kMaxFailures entries (the flag and max_error still reflect the full
/// run).
struct Report {
  static constexpr std::size_t kMaxFailures = 16;

  std::string suite;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::vector<FailureRecord> failures;

  /// Single-line JSON form, the unit of the verify command's output stream.
  std::string to_json_line() const;

  static Report from_json_line(const std::string& line);
};

}  // namespace s4cover
