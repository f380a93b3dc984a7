#pragma once

#include <iosfwd>

namespace hrlab::cli {

/// Exit codes: 0 pass, 1 verification failure, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hrlab::cli
