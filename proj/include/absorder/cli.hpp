#pragma once

#include <ostream>

namespace absorder {

/// Exit codes: 0 success, 1 disagreement or failed verification, 2 usage or
/// parse error (including the hasse/homology size caps), 3 resource cap
/// during certificate verification.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace absorder
