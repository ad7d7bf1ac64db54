#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "signiter/minimal.hpp"

namespace signiter::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kNumericalFailure = 3,  // singular-step or diverged
  kNotConverged = 4,      // max-iterations
};

struct VerifyCheck {
  std::string kind;  // "three-way", "strictness", "exact-order", "reciprocity", "endpoint"
  int s = 0;
  int m = 0;
  int n = 0;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  int s_max = 0;
  std::vector<ScanReport> scans;
  std::vector<VerifyCheck> checks;

  bool passed() const;
};

/// Everything `verify --s-max S` certifies, for s = 2..s_max.
VerifyReport run_verification(int s_max);

/// Parses argv (argv[0] is the program name) and runs one subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace signiter::cli
