#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qobdd {

// Full command dispatch against explicit streams so tests can capture bytes.
// Exit codes: 0 success, 1 parse/validation failure, 2 usage error, 3 guard
// exceeded. Identical invocations over identical files produce identical
// bytes on both streams.
int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qobdd
