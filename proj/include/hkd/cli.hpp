#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hkd::cli {

/// Runs one `hkdl` invocation. `args` excludes the program name. Returns the
/// process exit status: 0 ok, 1 parse error, 2 domain/validation error,
/// 3 resource cap, 4 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hkd::cli
