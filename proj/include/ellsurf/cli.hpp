#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ellsurf::cli {

/// Entry point behind the ellsurf executable. args[0] is the program name.
/// Returns 0 on success, 1 on a domain error, 2 on a usage error; errors are
/// reported as one JSON line on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ellsurf::cli
