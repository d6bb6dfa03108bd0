#pragma once

#include <iosfwd>

namespace lcsz::cli {

// Exit codes: 0 success, 1 usage, 2 parse, 3 infeasible, 4 size guard, 5 verification mismatch.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace lcsz::cli
