#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rewire::cli {

/// Runs one command; `args` excludes the program name. Returns the exit code:
/// 0 success, 1 verification or constraint failure, 2 usage or input error.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace rewire::cli
