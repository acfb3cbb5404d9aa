#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tamari_lab {

// Runs the command-line tool on the given arguments (program name excluded).
// Exit codes: 0 success / all checks passed, 1 verification failure (or an
// internal invariant violation), 2 usage, parse, or limit errors, 3 semantic
// input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace tamari_lab
