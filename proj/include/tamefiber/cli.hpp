#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tamefiber {

/// Runs the command line `args` (without the program name). Returns 0 on
/// success, 1 on usage errors and 2 when the library rejects the input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tamefiber
