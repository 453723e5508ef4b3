#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace superschur::cli {

/// Exit statuses of the command-line tool.
enum Exit : int { ok = 0, check_failed = 1, usage = 2 };

/// Runs one invocation; args excludes the program name.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace superschur::cli
