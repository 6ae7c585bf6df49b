#pragma once

#include <iosfwd>

namespace leiblab {

/// Exit codes: 0 success, 1 a check failed, 2 usage error, 3 parse or validation error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace leiblab
