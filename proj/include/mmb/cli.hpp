#pragma once

namespace mmb::cli {

// Entry point behind main(); exposed so tests can drive subcommands
// in-process. Returns the process exit code.
int run(int argc, const char* const* argv);

}  // namespace mmb::cli
