#pragma once

#include <iosfwd>

namespace malle::cli {

// Exit codes: 0 success, 1 domain or validation failure, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace malle::cli
