#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qlt::cli {

/// Parses arguments (program name excluded) and runs the requested mode.
/// Returns 0 when every executed applicable check passed, 1 when any check
/// failed, 2 on usage or validation errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qlt::cli
