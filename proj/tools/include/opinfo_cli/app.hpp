#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace opinfo::cli {

/// Parses argv, runs the subcommand and writes the report to `out` (or to
/// --out). Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace opinfo::cli
