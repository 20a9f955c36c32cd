#pragma once

#include <ostream>

namespace disect {

/// Entry point behind the `disect` binary, separated so tests can drive
/// it. Returns the process exit code: 0 success, 1 input error,
/// 2 internal assertion (a guaranteed certificate inequality failed).
int cli_run(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

} // namespace disect
