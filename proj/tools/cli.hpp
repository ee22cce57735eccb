#pragma once

#include <ostream>

namespace delzant::cli {

/// Entry point of the `delzant` binary with the streams made explicit so
/// tests can capture them. Exit codes: 0 success, 1 `check` verdict false,
/// 2 bad input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace delzant::cli
