#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "ekcodes/core.hpp"

namespace ekc {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 1,
  kExitVerificationFailed = 2,
  kExitSearchFailed = 3,
};

/// Parses "a1,a2,...|b1,b2,...|..." into parts. Empty parts are allowed.
std::vector<std::vector<int>> parse_parts(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

/// Runs one command line. argv[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ekc
