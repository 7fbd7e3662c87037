#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace modkit::cli {

/// Runs one command line (without the program name). JSON goes to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 on parse or validation
/// errors and 2 when a size guard refuses the instance.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace modkit::cli
