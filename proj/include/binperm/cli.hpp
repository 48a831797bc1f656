#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace binperm::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Runs the command-line tool on the given arguments (program name not
/// included). Returns 0 on success / all checks green, 1 when a
/// mathematical check is falsified, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace binperm::cli
