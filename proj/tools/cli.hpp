#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace perfarr::cli {

/// Runs the command line given argv-style arguments (program name excluded).
/// Exit code 0: success / property holds; 1: property fails; 2: usage or
/// validation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace perfarr::cli
