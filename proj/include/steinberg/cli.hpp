#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace steinberg::cli {

/// Exit codes: 0 ok, 1 invalid mathematical input or parse failure, 2 usage
/// error or unreadable file. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace steinberg::cli
