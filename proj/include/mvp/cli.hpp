#pragma once

#include <string>
#include <vector>

namespace mvp::cli {

/// Parses and dispatches the `discover`, `project`, `generate`, `render`
/// and `bench` subcommands. Returns the process exit status: 0 on success,
/// nonzero with a one-line diagnostic on stderr otherwise.
int run(const std::vector<std::string>& args);
int run(int argc, char** argv);

} // namespace mvp::cli
