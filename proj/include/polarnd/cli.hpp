#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polarnd {

std::string version();

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics and warnings to `err`. Returns 0 on success, 1 when the
/// computation fails and 2 on usage errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polarnd
