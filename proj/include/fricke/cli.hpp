#pragma once

// Command-line driver. `run` takes the argument list without the program
// name, writes reports/series to `out` and diagnostics to `err`, and returns
// the process exit code: 0 when every check passes, 1 when a mathematical
// check fails or a numeric search does not converge, 2 on usage or input
// errors.

#include <iosfwd>
#include <string>
#include <vector>

namespace fricke {

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace fricke
