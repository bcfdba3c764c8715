#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace altnf {

/// Entry point behind the altnf binary. `args` excludes the program name.
/// Returns 0 on success or verification pass, 1 on verification failure,
/// 2 on usage or parse errors (diagnostic on `err`, one line).
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

} // namespace altnf
