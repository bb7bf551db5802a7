#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace syzgap {

/// Runs the command line without the program name. Returns 0 on success,
/// 1 when a verifier reports violations and 2 on invalid input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace syzgap
