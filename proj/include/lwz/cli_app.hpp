#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lwz::cli {

/// Runs the command-line interface on already-split arguments (without the
/// program name), writing results to out and diagnostics to err.  Returns
/// the process exit code: 0 on success, 1 when a computation fails or a
/// verification scope reports failures, 2 for unusable invocations.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace lwz::cli
