#pragma once

#include <ostream>

namespace gsr {

/// Entry point of the `gsr` command-line tool. Returns the process exit
/// code: 0 on success, 1 for usage errors, 2 for input or domain errors.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace gsr
