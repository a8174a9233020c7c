#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace specmom::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Runs one subcommand. Returns 0 on success, 1 on a domain error and 2 on a
/// usage error; diagnostics go to `err`, never exceptions.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace specmom::cli
