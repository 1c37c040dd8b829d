#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace weyltab {

// Runs the command line given as plain arguments (no program name).
// Returns the process exit code: 0 success, 1 usage or domain error,
// 2 verification failure, 3 cache or file I/O error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

// argv wrapper around run_cli for main().
int run_cli_main(int argc, char** argv);

}  // namespace weyltab
