#pragma once

#include <istream>
#include <string>
#include <vector>

namespace fqp::cli {

/// Exit statuses of the command-line front end.
enum ExitCode : int { kOk = 0, kInvariant = 1, kUsage = 2 };

struct Outcome {
  int status = kOk;
  std::string out;  // report, written to stdout in one piece
  std::string err;  // diagnostics
};

/// Runs one job. `args` excludes the program name; a polynomial argument "-"
/// reads one polynomial per non-empty line from `in`.
Outcome run(const std::vector<std::string>& args, std::istream& in);

}  // namespace fqp::cli
