#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace walker::cli {

enum ExitCode : int {
    kPass = 0,
    kFail = 1,
    kIoError = 2,
    kConditional = 3,
    kUsage = 64,
};

// Runs one invocation. `args` excludes the program name. `color` enables ANSI colors in
// text output (callers decide from the terminal and NO_COLOR).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color = false);

}  // namespace walker::cli
