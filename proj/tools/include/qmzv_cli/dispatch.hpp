#pragma once

#include <ostream>
#include <vector>

#include "qmzv/report.hpp"

namespace qmzv::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kUsageError = 2,
  kVerificationFailed = 3,
};

/// Runs one command line (argv[0] is the program name) and returns the exit code.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// JSON array, or one "pass|FAIL identity params" line per report.
void emit_reports(const std::vector<Report>& reports, bool json, std::ostream& out);

}  // namespace qmzv::cli
