#pragma once

#include <iosfwd>

namespace johnson {

// Exit codes: 0 ok, 1 failed certification or simulation mismatch, 2 bad flags.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace johnson
