#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace semitrans::tools {

/// Exit codes: 2 bad usage or unreadable model, 1 a failed check or computation, 0 otherwise.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace semitrans::tools
