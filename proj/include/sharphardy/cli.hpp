#pragma once

// Command-line front end: sharphardy <subcommand> [flags].

#include <ostream>
#include <string>
#include <vector>

namespace sharphardy::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kInput = 2, kNumeric = 3 };

// args excludes the program name. Reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sharphardy::cli
