#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "s4cover/quaternion.hpp"

namespace s4cover::testing {

/// Independent rotation oracle: the 3x3 matrix of the rotation realized by
/// conjugation with the unit quaternion q, applied to a vector. Kept apart
/// from the quaternion arithmetic it checks.
inline std::array<double, 3> rotate_by_matrix(const Quaternion& q,
                                              const std::array<double, 3>& v) {
  const double w = q.w, x = q.x, y = q.y, z = q.z;
  const double m[3][3] = {
      {1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
      {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
      {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}};
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i] += m[i][j] * v[j];
  return out;
}

struct CliResult {
  int exit_code;
  std::string output;
};

/// Runs the installed CLI binary with the given argument string, capturing
/// standard output.
inline CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(S4COVER_CLI_PATH) + " " + args +
                          " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe))
    out.append(buf, n);
  const int status = pclose(pipe);
  const int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status)
                                                      : -1;
  return {code, out};
}

}  // namespace s4cover::testing
