#pragma once

#include <string>
#include <vector>

namespace tpa::cli {

enum ExitCode { ok = 0, verification_failed = 1, usage_error = 2 };

struct RunResult {
  int exit = ok;
  std::string out;
  std::string err;
};

/// Runs one command line (without the program name). Never throws; output is a
/// single JSON document on out, errors go to err.
RunResult run(const std::vector<std::string>& args);

} // namespace tpa::cli
