#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pickett::cli {

/// Process exit statuses; stable for scripting.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,     // boundary-check: modified model left its bounds
  kConfigError = 2,     // bad config, arguments or unknown keys
  kNumericalError = 3,  // solver / simulation / metric failure
  kIoError = 4,
};

/// Runs one subcommand. `args[0]` is the program name.
///
///   simulate <config> [-o trace.csv]
///   compare <config> -o <dir>
///   boundary-check <config>
///   error <model.csv> <reference.csv> [--region on|off|full]
///   fit <config> <reference.csv> --free name[:lo:hi],... -o <params-file>
///       [--region on|off|full] [--budget N]
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace pickett::cli
