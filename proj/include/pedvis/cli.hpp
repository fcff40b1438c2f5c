#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pedvis {

enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 1,
    kExitBadArgs = 2,
    kExitIo = 3,
};

/// Entry point behind the `pedvis` executable. `args[0]` is the program
/// name. Diagnostics go to `err` as one JSON object per line.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pedvis
