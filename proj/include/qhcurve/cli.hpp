#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qhcurve/error.hpp"

namespace qhcurve {

/// Exit codes of the command line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 1,
  kExitPrecisionCap = 2,
  kExitInternal = 3,
};

int exit_code_for(ErrorKind kind);
/// Pipeline stage an error kind originates from, for diagnostics.
const char* stage_for(ErrorKind kind);

/// Runs the command line tool: `qhcurve analyze [EXPR] [options]`. `args`
/// excludes the program name. Reads stdin when neither EXPR nor --file is given.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qhcurve
